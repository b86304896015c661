#include <doctest.h>

#include "skewtab/counting.hpp"
#include "skewtab/numbers.hpp"
#include "skewtab/qanalogues.hpp"

using namespace skewtab;

namespace {

const std::vector<RppMethod> kAllMethods = {
    RppMethod::MinStat,       RppMethod::MaxStat,       RppMethod::ExcitedPeaks,
    RppMethod::ReverseExcited, RppMethod::Krattenthaler, RppMethod::Grothendieck};

}  // namespace

TEST_CASE("rpp ratio on the 2221/11 example") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    QLaurent want = QLaurent::one() - QLaurent::monomial(1, 5) - QLaurent::monomial(1, 6) -
                    QLaurent::monomial(1, 7) + QLaurent::monomial(1, 8) +
                    QLaurent::monomial(1, 10);
    for (RppMethod m : kAllMethods) CHECK(rpp_ratio(s, m) == want);
}

TEST_CASE("rpp ratio trivial cases") {
    CHECK(rpp_ratio(parse_shape("3,1"), RppMethod::MinStat) == QLaurent::one());
    CHECK(rpp_ratio(parse_shape("2/0"), RppMethod::Krattenthaler) == QLaurent::one());
    // sigma_3 against the series oracle to degree 30
    SkewShape sig = zigzag(3);
    QLaurent r = rpp_ratio(sig, RppMethod::MinStat);
    QSeries lhs = QSeries::from(r, 30) * rpp_straight_closed(sig.outer(), 30);
    CHECK(lhs.agrees_with(rpp_series(sig, 30)));
}

TEST_CASE("all methods agree and vanish correctly at q=1, |lambda| <= 5") {
    for (const SkewShape& s : all_skew_shapes(5)) {
        QLaurent first = rpp_ratio(s, kAllMethods[0]);
        for (RppMethod m : kAllMethods) CHECK(rpp_ratio(s, m) == first);
        CHECK(first.eval_one() == (s.inner().size() == 0 ? 1 : 0));
    }
}

TEST_CASE("a shape with a negative exponent in the first statistic") {
    // 41/3 has a cell whose replacement weight is negative; the identity
    // still holds as Laurent polynomials
    SkewShape s = parse_shape("4,1/3");
    QLaurent first = rpp_ratio(s, kAllMethods[0]);
    for (RppMethod m : kAllMethods) CHECK(rpp_ratio(s, m) == first);
    QSeries lhs = QSeries::from(first, 30) * rpp_straight_closed(s.outer(), 30);
    CHECK(lhs.agrees_with(rpp_series(s, 30)));
}

TEST_CASE("straight-shape closed product equals the DP oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(rpp_straight_closed(p, 20).agrees_with(rpp_series(SkewShape(p, {}), 20)));
    // lambda = (2,1): l = (3,1), [2]/([3]! [1]!)
    QSeries direct = QSeries::from(QLaurent::bracket(2), 20) *
                     QSeries::from(QLaurent::bracket(3), 20).inverse() *
                     QSeries::from(QLaurent::bracket(2), 20).inverse() *
                     QSeries::from(QLaurent::bracket(1), 20).inverse() *
                     QSeries::from(QLaurent::bracket(1), 20).inverse();
    CHECK(rpp_straight_closed(parse_partition("2,1"), 20).agrees_with(direct));
}

TEST_CASE("series identity ratio * rpp_lambda = rpp_{lambda/mu}, degree 25") {
    for (const SkewShape& s : all_skew_shapes(5)) {
        QLaurent r = rpp_ratio(s, RppMethod::MinStat);
        long deg = 25;
        if (!r.is_zero()) deg = std::max(deg, r.max_degree() + 2);
        QSeries lhs = QSeries::from(r, deg) * rpp_straight_closed(s.outer(), deg);
        CHECK(lhs.agrees_with(rpp_series(s, deg)));
    }
}

TEST_CASE("q -> 1 limits") {
    CHECK(q_to_one_limit(QLaurent::bracket(1) * QLaurent::bracket(1), 2) == 1);
    CHECK(q_to_one_limit(QLaurent::one(), 0) == 1);
    SkewShape s = parse_shape("2,2,2,1/1,1");
    QLaurent r = rpp_ratio(s, RppMethod::MinStat);
    CHECK(q_to_one_limit(r, 2) == 27);  // T_{lambda/mu} of the running example
    CHECK(syt_count_from_rpp_ratio(s, r) == 9);
    for (const SkewShape& sh : all_skew_shapes(6)) {
        QLaurent ratio = rpp_ratio(sh, RppMethod::MaxStat);
        CHECK(syt_count_from_rpp_ratio(sh, ratio) ==
              count_syt_method(sh, SytMethod::Aitken).value);
    }
}

TEST_CASE("Chen-Stanley ratio against the principal specialization") {
    for (const SkewShape& s : all_skew_shapes(7)) {
        QLaurent cs = ssyt_ratio_q(s);
        long b = b_statistic(s.outer());
        long span = cs.is_zero() ? 0 : cs.max_degree() - std::min(0L, cs.min_degree());
        long big = 12 + 2 * b + span;
        QSeries num = ssyt_principal_series(s, big);
        QSeries den = ssyt_principal_closed(s.outer(), big);
        CHECK((num * den.inverse()).agrees_with(cs));
        // q -> 1 recovers f through the factorial-Schur evaluation of f^{lambda/mu}
        Int t_lm = cs.limit_at_one(s.inner().size());
        Rat f = Rat(hook_length_count(s.outer())) * Rat(factorial(s.size())) * Rat(t_lm) /
                Rat(factorial(s.outer().size()));
        CHECK(to_int_exact(f, "flm") == count_syt_method(s, SytMethod::Aitken).value);
    }
}

TEST_CASE("oplus composition law on brackets") {
    // [a] + [b] - [a][b] = [a+b] as polynomials
    for (long a = 1; a <= 20; a += 3)
        for (long b = 2; b <= 20; b += 5) {
            QLaurent lhs = QLaurent::bracket(a) + QLaurent::bracket(b) -
                           QLaurent::bracket(a) * QLaurent::bracket(b);
            CHECK(lhs == QLaurent::bracket(a + b));
        }
}

TEST_CASE("Grothendieck sign structure telescopes by max-tableau groups") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    int d = s.num_rows();
    SvtDecomposition dec = enumerate_svt(s.inner(), d, 99);
    QLaurent total;
    for (size_t i = 0; i < dec.base.size(); ++i) {
        // the group sum telescopes to q^{p(T0)} prod (1 - q^{w(u, T0(u))})
        QLaurent group_sum;
        for (const SetValuedTableau& T : dec.group[i]) {
            QLaurent term = QLaurent::one();
            if (T.surplus() % 2 != 0) term = -term;
            for (const auto& [u, vals] : T.entries)
                for (int rr : vals) term *= QLaurent::bracket(oot_weight(s, u, rr).get_si());
            group_sum += term;
        }
        TableauStats st = tableau_statistics(s, dec.base[i]);
        QLaurent expect = QLaurent::monomial(1, st.p.get_si());
        for (Cell u : dec.base[i].shape().cells())
            expect *= QLaurent::bracket(
                oot_weight(s, u, dec.base[i].at(u.row, u.col)).get_si());
        CHECK(group_sum == expect);
        total += group_sum;
    }
    CHECK(total == rpp_ratio(s, RppMethod::MinStat));
}

TEST_CASE("factorial Grothendieck bialternant cross-check at rational points") {
    /* G_mu(x | a) from the bialternant determinant of Ikeda-Naruse equals the
     * set-valued tableau sum, evaluated at rational sample points. */
    Partition mu = parse_partition("2,1");
    int nvars = 3;
    std::vector<Rat> x = {Rat(1, 2), Rat(1, 3), Rat(1, 5)};
    std::vector<Rat> a = {Rat(1, 7), Rat(2, 7), Rat(3, 7), Rat(4, 7), Rat(5, 7), Rat(6, 7)};
    // explicit return type: gmpxx expression templates must not outlive the
    // lambda parameters
    auto oplus = [](const Rat& p, const Rat& q) -> Rat { return p + q - p * q; };
    // tableau sum over SVT(mu, 3)
    SvtDecomposition dec = enumerate_svt(mu, nvars, 99);
    Rat tab_sum = 0;
    for (const auto& grp : dec.group)
        for (const SetValuedTableau& T : grp) {
            Rat term = (T.surplus() % 2 == 0) ? 1 : -1;
            for (const auto& [u, vals] : T.entries)
                for (int r : vals)
                    term *= oplus(x[static_cast<size_t>(r - 1)],
                                  a[static_cast<size_t>(r + content(u) - 1)]);
            tab_sum += term;
        }
    // bialternant: det[[x_i|a]^{mu_j + n - j} (1-x_i)^{j-1}] / prod_{i<j}(x_i - x_j)
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(nvars),
                                      std::vector<Rat>(static_cast<size_t>(nvars)));
    for (int i = 1; i <= nvars; ++i)
        for (int j = 1; j <= nvars; ++j) {
            long e = mu.part(j) + nvars - j;
            Rat entry = 1;
            for (long k = 1; k <= e; ++k)
                entry *= oplus(x[static_cast<size_t>(i - 1)], a[static_cast<size_t>(k - 1)]);
            for (int k = 1; k < j; ++k) entry *= 1 - x[static_cast<size_t>(i - 1)];
            mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = entry;
        }
    Rat vandermonde = 1;
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            vandermonde *= x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
    CHECK(det_rational(mat) / vandermonde == tab_sum);
}
