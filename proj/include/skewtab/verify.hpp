#pragma once

#include <string>
#include <vector>

#include "skewtab/counting.hpp"
#include "skewtab/qanalogues.hpp"

namespace skewtab {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string detail;  // counterexample description when failing
    double seconds = 0.0;
};

// Cross-method agreement for f and OOT, plus |L(nabla)| = |Delta| = OOT, for
// every skew shape with |lambda| <= max_cells.
SuiteResult suite_cross_methods(int max_cells, int jobs);

// Round trips through tilings and puzzles, cell-by-cell weight transport,
// and the p/p* statistics transport, for |lambda| <= max_cells.
SuiteResult suite_bijections(int max_cells, int jobs);

// All rpp_ratio methods agree, vanish correctly at q = 1, multiply back to
// rpp_{lambda/mu} as series to the given degree, and reproduce f through the
// q -> 1 limit; Chen-Stanley against the principal specialization series.
SuiteResult suite_qratio(int max_cells, long degree, int jobs);

// OOT(sigma_n) = G_{2n}, median Genocchi shapes, pistol oracles, and the
// odd Euler identity, for n <= n_max.
SuiteResult suite_genocchi(int n_max);

// Thick zigzag determinant, Hankel identities, shifted Genocchi formula and
// recurrences, and the proportionality identity.
SuiteResult suite_zigzag(int cells_max, int n_max);

// Sandwich bounds G <= f <= OOT*G on all scanned shapes and the zigzag chain
// f^{d2k/dk} <= f^{d2k+1/dk+1} <= f^{d2k+2/dk+1}.
SuiteResult suite_sandwich(int max_cells, int chain_k_max);

// Horizontal-translation invariance of OOT, the vertical-translation
// counterexample quintuple, and empty-column factorization.
SuiteResult suite_geometric(int max_cells);

std::vector<SuiteResult> run_all_suites(int max_cells, long degree, int jobs);

// Helper shared with the CLI: parallel scan over shapes with deterministic
// failure reporting (first failing shape in enumeration order).
std::string scan_shapes(int max_cells, int jobs,
                        const std::function<std::string(const SkewShape&)>& check,
                        long* checks_out);

}  // namespace skewtab
