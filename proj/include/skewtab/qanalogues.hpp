#pragma once

#include "skewtab/diagrams.hpp"

namespace skewtab {

// Routes to the ratio rpp_{lambda/mu}(q) / rpp_lambda(q), a Laurent
// polynomial in q (plain polynomial for straight shapes, value 1 on empty mu).
enum class RppMethod {
    MinStat,         // sum_T q^{p(T)}  prod (1 - q^{w(u,T(u))})
    MaxStat,         // sum_T q^{p*(T)} prod (1 - q^{w(u,T(u))})
    ExcitedPeaks,    // sum over OO excited diagrams with peak statistic
    ReverseExcited,  // sum over reverse excited diagrams with F(D) statistic
    Krattenthaler,   // determinant of q-factorial ratios over the rpp_lambda product
    Grothendieck,    // signed set-valued tableau sum
};

const char* to_string(RppMethod m);
std::optional<RppMethod> rpp_method_from_string(const std::string& name);

QLaurent rpp_ratio(const SkewShape& s, RppMethod m);

// Closed product form for straight shapes:
// rpp_lambda(q) = prod_{i<j} [l_i - l_j] / prod_i [l_i]!, l_i = lambda_i + d - i.
QSeries rpp_straight_closed(const Partition& lambda, long max_deg);

// Chen-Stanley: s_{lambda/mu}(1,q,..)/s_lambda(1,q,..) as a Laurent polynomial.
QLaurent ssyt_ratio_q(const SkewShape& s);

// lim_{q->1} (1-q)^{-mu_size} p(q), exact.
Int q_to_one_limit(const QLaurent& p, long mu_size);

// f^{lambda/mu} recovered from the rpp ratio:
// |lambda/mu|! / prod h(lambda) * lim_{q->1} (1-q)^{-|mu|} ratio.
Int syt_count_from_rpp_ratio(const SkewShape& s, const QLaurent& ratio);

}  // namespace skewtab
