#include <doctest.h>

#include "skewtab/qseries.hpp"

using namespace skewtab;

TEST_CASE("QLaurent arithmetic and normal form") {
    QLaurent a = QLaurent::bracket(2);  // 1 - q^2
    QLaurent b = QLaurent::bracket(3);
    QLaurent p = a * b;
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(3) == -1);
    CHECK(p.coeff(5) == 1);
    CHECK(p.max_degree() == 5);
    CHECK((a - a).is_zero());
    CHECK(QLaurent::bracket(0).is_zero());
    CHECK(QLaurent::monomial(1, -3) * QLaurent::monomial(2, 5) ==
          QLaurent::monomial(2, 2));
    CHECK(p.eval_one() == 0);
}

TEST_CASE("QLaurent exact division") {
    QLaurent a = QLaurent::bracket(2) * QLaurent::bracket(3) * QLaurent::monomial(1, -2);
    CHECK(a.div_exact(QLaurent::bracket(3)) ==
          QLaurent::bracket(2) * QLaurent::monomial(1, -2));
    CHECK_THROWS_AS(QLaurent::bracket(3).div_exact(QLaurent::bracket(2)), InternalError);
    CHECK(QLaurent::zero().div_exact(QLaurent::bracket(2)).is_zero());
}

TEST_CASE("limit at q=1 after dividing by powers of (1-q)") {
    QLaurent p = QLaurent::bracket(1) * QLaurent::bracket(1);  // (1-q)^2
    CHECK(p.limit_at_one(2) == 1);
    CHECK(QLaurent::one().limit_at_one(0) == 1);
    // [a] / (1-q) -> a at q=1
    for (long a = 1; a <= 6; ++a) CHECK(QLaurent::bracket(a).limit_at_one(1) == a);
    CHECK_THROWS_AS(QLaurent::bracket(2).limit_at_one(2), DomainError);
}

TEST_CASE("to_string format") {
    QLaurent p = QLaurent::one() - QLaurent::monomial(1, 5) - QLaurent::monomial(1, 6) -
                 QLaurent::monomial(1, 7) + QLaurent::monomial(1, 8) +
                 QLaurent::monomial(1, 10);
    CHECK(p.to_string() == "1 - q^5 - q^6 - q^7 + q^8 + q^10");
    CHECK(QLaurent::zero().to_string() == "0");
    CHECK(QLaurent::monomial(-2, 1).to_string() == "-2*q");
    CHECK(QLaurent::monomial(1, -2).to_string() == "q^-2");
}

TEST_CASE("QSeries inverse and products") {
    long trunc = 12;
    QSeries geom = QSeries::from(QLaurent::bracket(1), trunc).inverse();
    for (long e = 0; e <= trunc; ++e) CHECK(geom.coeff(e) == 1);
    QSeries prod = geom * QSeries::from(QLaurent::bracket(1), trunc);
    CHECK(prod.agrees_with(QLaurent::one()));
    // inverse with a shifted lowest term
    QSeries shifted = QSeries::from(QLaurent::monomial(1, 2) * QLaurent::bracket(1), 14);
    QSeries inv = shifted.inverse();
    CHECK((shifted * inv).agrees_with(QLaurent::one()));
    CHECK_THROWS_AS(QSeries::from(QLaurent::monomial(2, 0), 5).inverse(), DomainError);
}

namespace {

// deterministic xorshift generator for the property checks
struct Rng {
    unsigned long state = 0x9e3779b97f4a7c15UL;
    unsigned long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1));
    }
};

QLaurent random_poly(Rng& rng) {
    QLaurent p;
    long terms = rng.range(0, 6);
    for (long t = 0; t < terms; ++t)
        p += QLaurent::monomial(Int(rng.range(-9, 9)), rng.range(-8, 12));
    return p;
}

}  // namespace

TEST_CASE("ring laws on random Laurent polynomials") {
    Rng rng;
    for (int trial = 0; trial < 300; ++trial) {
        QLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
        CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());
        // q = 1 limits factor over products when both orders are exact
        long trunc = 20;
        QSeries sa = QSeries::from(a, trunc), sb = QSeries::from(b, trunc);
        CHECK((sa * sb).agrees_with(QSeries::from(a * b, trunc)));
    }
}

TEST_CASE("series inversion is a two-sided inverse") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        QLaurent u = QLaurent::monomial(rng.next() % 2 ? 1 : -1, rng.range(-3, 3));
        QLaurent rest = random_poly(rng);
        QLaurent p = u;  // unit lowest term, arbitrary tail above it
        if (!rest.is_zero())
            p += rest.shifted(u.min_degree() + 1 + rng.range(0, 3) - rest.min_degree());
        QSeries s = QSeries::from(p, p.min_degree() + 25);
        CHECK((s * s.inverse()).agrees_with(QLaurent::one()));
    }
}

TEST_CASE("Laurent determinant (fraction-free)") {
    std::vector<std::vector<QLaurent>> m = {
        {QLaurent::bracket(1), QLaurent::bracket(2)},
        {QLaurent::bracket(2), QLaurent::bracket(4)},
    };
    QLaurent det = det_laurent(m);
    CHECK(det == QLaurent::bracket(1) * QLaurent::bracket(4) -
                     QLaurent::bracket(2) * QLaurent::bracket(2));
    // zero pivot forces a swap
    std::vector<std::vector<QLaurent>> sw = {
        {QLaurent::zero(), QLaurent::one()},
        {QLaurent::one(), QLaurent::zero()},
    };
    CHECK(det_laurent(sw) == -QLaurent::one());
}
