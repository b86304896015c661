#include "skewtab/qanalogues.hpp"

#include "skewtab/numbers.hpp"

namespace skewtab {

const char* to_string(RppMethod m) {
    switch (m) {
        case RppMethod::MinStat: return "minstat";
        case RppMethod::MaxStat: return "maxstat";
        case RppMethod::ExcitedPeaks: return "excitedpeaks";
        case RppMethod::ReverseExcited: return "reverseexcited";
        case RppMethod::Krattenthaler: return "krattenthaler";
        case RppMethod::Grothendieck: return "grothendieck";
    }
    return "?";
}

std::optional<RppMethod> rpp_method_from_string(const std::string& name) {
    for (RppMethod m : {RppMethod::MinStat, RppMethod::MaxStat, RppMethod::ExcitedPeaks,
                        RppMethod::ReverseExcited, RppMethod::Krattenthaler,
                        RppMethod::Grothendieck})
        if (name == to_string(m)) return m;
    return std::nullopt;
}

namespace {

QLaurent rpp_ratio_stat(const SkewShape& s, bool use_max) {
    QLaurent total;
    for (const Tableau& T : enumerate_ssyt(SkewShape(s.inner(), {}), s.num_rows())) {
        TableauStats st = tableau_statistics(s, T);
        QLaurent term = QLaurent::monomial(1, (use_max ? st.p_star : st.p).get_si());
        for (const auto& [u, w] : st.weights) {
            term *= QLaurent::bracket(w.get_si());
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

QLaurent rpp_ratio_excited_peaks(const SkewShape& s) {
    int d = s.num_rows();
    QLaurent total;
    for (const ExcitedDiagram& D : oo_excited_diagrams(s)) {
        QLaurent term = QLaurent::monomial(1, excited_peak_statistic(s, D).get_si());
        for (Cell u : D.cells) {
            term *= QLaurent::bracket(s.outer().part(d + 1 - u.row) + u.row - u.col);
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

QLaurent rpp_ratio_reverse_excited(const SkewShape& s) {
    int d = s.num_rows();
    QLaurent total;
    for (const ReverseExcitedDiagram& D : reverse_excited_diagrams(s)) {
        QLaurent term = QLaurent::monomial(1, right_neighbor_statistic(s, D).get_si());
        for (Cell u : broken_diagonals(s, D).b_cells) {
            term *= QLaurent::bracket(s.outer().part(u.row) + d - u.col);
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

QLaurent bracket_factorial_ratio(long hi, long lo) {
    // [hi]! / [lo]! = prod_{v=lo+1}^{hi} [v]; requires 0 <= lo <= hi
    QLaurent out = QLaurent::one();
    for (long v = lo + 1; v <= hi; ++v) out *= QLaurent::bracket(v);
    return out;
}

QLaurent rpp_ratio_krattenthaler(const SkewShape& s) {
    int d = s.num_rows();
    if (d == 0) return QLaurent::one();
    /* ratio = det[ q^{l_i (j-i)} [l_i]! / [lambda_i - i - mu_j + j]! ]
     *         / prod_{i<j} [l_i - l_j],   l_i = lambda_i + d - i.
     * Entries with a negative q-factorial index vanish. */
    std::vector<long> ell;
    for (int i = 1; i <= d; ++i) ell.push_back(s.outer().part(i) + d - i);
    std::vector<std::vector<QLaurent>> mat(static_cast<size_t>(d),
                                           std::vector<QLaurent>(static_cast<size_t>(d)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            long m = s.outer().part(i) - i - s.inner().part(j) + j;
            if (m < 0) continue;  // zero entry
            mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                bracket_factorial_ratio(ell[static_cast<size_t>(i - 1)], m)
                    .shifted(ell[static_cast<size_t>(i - 1)] * (j - i));
        }
    QLaurent det = det_laurent(std::move(mat));
    QLaurent denom = QLaurent::one();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            denom *= QLaurent::bracket(ell[static_cast<size_t>(i)] -
                                       ell[static_cast<size_t>(j)]);
    return det.div_exact(denom);
}

QLaurent rpp_ratio_grothendieck(const SkewShape& s) {
    int d = s.num_rows();
    long mu_size = s.inner().size();
    SvtDecomposition dec =
        enumerate_svt(s.inner(), d, static_cast<long>(d) * std::max(mu_size, 1L));
    QLaurent total;
    for (const auto& members : dec.group) {
        for (const SetValuedTableau& T : members) {
            QLaurent term = QLaurent::one();
            if ((T.surplus()) % 2 != 0) term = -term;
            for (const auto& [u, vals] : T.entries) {
                for (int r : vals) {
                    term *= QLaurent::bracket(oot_weight(s, u, r).get_si());
                    if (term.is_zero()) break;
                }
                if (term.is_zero()) break;
            }
            total += term;
        }
    }
    return total;
}

}  // namespace

QLaurent rpp_ratio(const SkewShape& s, RppMethod m) {
    switch (m) {
        case RppMethod::MinStat: return rpp_ratio_stat(s, false);
        case RppMethod::MaxStat: return rpp_ratio_stat(s, true);
        case RppMethod::ExcitedPeaks: return rpp_ratio_excited_peaks(s);
        case RppMethod::ReverseExcited: return rpp_ratio_reverse_excited(s);
        case RppMethod::Krattenthaler: return rpp_ratio_krattenthaler(s);
        case RppMethod::Grothendieck: return rpp_ratio_grothendieck(s);
    }
    throw DomainError("unknown rpp method");
}

QSeries rpp_straight_closed(const Partition& lambda, long max_deg) {
    int d = lambda.length();
    QLaurent num = QLaurent::one();
    std::vector<long> ell;
    for (int i = 1; i <= d; ++i) ell.push_back(lambda.part(i) + d - i);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            num *= QLaurent::bracket(ell[static_cast<size_t>(i)] - ell[static_cast<size_t>(j)]);
    QSeries out = QSeries::from(num, max_deg);
    for (int i = 0; i < d; ++i)
        for (long v = 1; v <= ell[static_cast<size_t>(i)]; ++v)
            out = out * QSeries::from(QLaurent::bracket(v), max_deg).inverse();
    return out;
}

QLaurent ssyt_ratio_q(const SkewShape& s) {
    int d = s.num_rows();
    QLaurent total;
    for (const Tableau& T : enumerate_ssyt(SkewShape(s.inner(), {}), d)) {
        QLaurent term = QLaurent::one();
        long shift = 0;
        for (Cell u : T.shape().cells()) {
            int v = T.at(u.row, u.col);
            shift += v - d;
            term *= QLaurent::bracket(oot_weight(s, u, v).get_si());
            if (term.is_zero()) break;
        }
        total += term.shifted(shift);
    }
    return total;
}

Int q_to_one_limit(const QLaurent& p, long mu_size) {
    return p.limit_at_one(mu_size);
}

Int syt_count_from_rpp_ratio(const SkewShape& s, const QLaurent& ratio) {
    Int v = ratio.limit_at_one(s.inner().size());
    Rat f = Rat(factorial(s.size())) * Rat(v) / Rat(hook_product(s.outer()));
    return to_int_exact(f, "f from rpp ratio");
}

}  // namespace skewtab
