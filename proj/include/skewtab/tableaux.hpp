#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "skewtab/qseries.hpp"
#include "skewtab/shapes.hpp"

namespace skewtab {

// Filling of a (skew) diagram; rows weakly increase, columns strictly
// increase (semistandard).  Straight shapes are skew shapes with empty inner.
class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    // entry at cell (i, j); the cell must lie in the shape
    int at(int i, int j) const;
    bool has_cell(int i, int j) const { return shape_.cell_in({i, j}); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // entries of column j, top to bottom
    std::vector<int> column(int j) const;

    bool is_semistandard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

    std::string to_string() const;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;  // rows_[i-1][j - inner_i - 1]
};

// Row flags: entry in row i lies in [lower[i-1], upper[i-1]].
struct FlagVector {
    std::vector<int> lower;
    std::vector<int> upper;
};

// Enumerate semistandard fillings with per-cell inclusive bounds; cells are
// filled in row-major order, so the output is lexicographic in the row
// reading word.
void for_each_ssyt(const SkewShape& shape,
                   const std::function<std::pair<int, int>(Cell)>& bounds,
                   const std::function<void(const Tableau&)>& visit);

// Flagged tableaux of a straight or skew shape (lower/upper row flags).
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const FlagVector& flags);
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int bound);

// Okounkov-Olshanski tableaux of lambda/mu: T in SSYT(mu, d) with
// c(u) < lambda_{d+1-T(u)} everywhere.
std::vector<Tableau> enumerate_oot(const SkewShape& s);

// Per-cell weight lambda_{d+1-k} - c(u) attached to value k at cell u.
Int oot_weight(const SkewShape& s, Cell u, int k);

// SF(lambda/mu): skew SSYT with T(i,j) <= i.
std::vector<Tableau> enumerate_sf(const SkewShape& s);

// Column rule for Phi: column i of the image lists the k in 1..lambda'_i
// with d+1-k absent from column i of T.
Tableau phi_oot_to_sf(const SkewShape& s, const Tableau& oot);

// f^{lambda/mu} by corner-removal recursion (memoized); ResourceError above
// the budget.
Int count_syt(const SkewShape& s, long budget_cells = 20);

// Explicit SYT listing (small shapes only).
std::vector<Tableau> enumerate_syt(const SkewShape& s, long budget_cells = 10);

struct TableauStats {
    std::map<Cell, int> m;          // m_T(u)
    std::map<Cell, std::optional<int>> M;  // M_T(u); nullopt encodes infinity
    std::map<Cell, Int> weights;    // u -> lambda_{d+1-T(u)} - c(u)
    Int p = 0;                      // sum of w(u,k), m_T(u) <= k < T(u)
    Int p_star = 0;                 // sum of w(u,k), T(u) < k <= min(d, M_T(u))
};

// T must lie in SSYT(mu, d) for the skew shape s = lambda/mu.
TableauStats tableau_statistics(const SkewShape& s, const Tableau& T);

// --- set-valued tableaux ---------------------------------------------------

struct SetValuedTableau {
    Partition shape;
    std::map<Cell, std::set<int>> entries;

    long surplus() const;  // |T| - |mu|
    bool valid() const;    // every selection semistandard (boundary criterion)
};

// All SVT of shape mu with entries <= d and surplus <= max_extra, grouped by
// the max-tableau decomposition: group[i] lists the SVTs whose cellwise
// maxima form base[i].
struct SvtDecomposition {
    std::vector<Tableau> base;                        // SSYT(mu, d)
    std::vector<std::vector<SetValuedTableau>> group;
};
SvtDecomposition enumerate_svt(const Partition& mu, int d, long max_extra);

// --- generating-function oracles (dynamic programming) ----------------------

// rpp_theta(q) to degree max_deg: chains of subpartitions between inner and
// outer; entries <= max_deg suffice because level sets are nested.
QSeries rpp_series(const SkewShape& s, long max_deg);

// s_{lambda/mu}(1, q, q^2, ...) to degree max_deg (horizontal-strip chains).
QSeries ssyt_principal_series(const SkewShape& s, long max_deg);

// s_lambda(1, q, ...) = q^{b(lambda)} / prod (1 - q^{h(u)}) as a series.
QSeries ssyt_principal_closed(const Partition& lambda, long max_deg);

}  // namespace skewtab
