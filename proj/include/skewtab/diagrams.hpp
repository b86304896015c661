#pragma once

#include <map>
#include <set>
#include <vector>

#include "skewtab/tableaux.hpp"

namespace skewtab {

// A diagram is keyed by its cell set plus the origin map; the generating
// tableau is kept because every weight below reads off it.
struct ExcitedDiagram {
    std::set<Cell> cells;
    std::map<Cell, Cell> origin;  // original cell of [mu] -> current cell
    Tableau tab;                  // row numbers, shape mu
};

// E(lambda/mu) via the flagged-tableaux bijection: the cell (i,j) of [mu]
// sits at (T(i,j), j - i + T(i,j)).
std::vector<ExcitedDiagram> excited_diagrams(const SkewShape& s);

// Flags f_i = max { k : lambda_k - k >= mu_i - i }.
std::vector<int> excited_flags(const SkewShape& s);

// OOE(lambda/mu): image of the Okounkov-Olshanski tableaux.  Lives in the
// upside-down [lambda*] ambient with row i of length lambda_{d+1-i} + i - 1.
std::vector<ExcitedDiagram> oo_excited_diagrams(const SkewShape& s);

bool ooe_ambient_contains(const SkewShape& s, Cell u);

// Test oracle: closure of [mu] under excited moves whose landing cell stays
// inside `ambient`; when `keep` is set, only the diagrams inside it are
// returned (exploration may pass through states outside `keep`, which is how
// OOE sits inside the unbounded-row family E(Lambda^d/mu)).
std::vector<ExcitedDiagram> excited_closure(
    const SkewShape& s, const std::function<bool(Cell)>& ambient,
    const std::function<bool(Cell)>& keep = {});

struct ReverseExcitedDiagram {
    std::set<Cell> cells;         // in the shifted grid
    std::map<Cell, Cell> origin;  // original cell of [lambda*/mu*] -> current
    Tableau sf;                   // row numbers, shape lambda/mu
};

// RE(lambda/mu) from SF(lambda/mu): the cell (i,j) of [lambda/mu], excited
// a = i - U(i,j) times, sits at (U(i,j), j + d - 1 - a).
std::vector<ReverseExcitedDiagram> reverse_excited_diagrams(const SkewShape& s);

ReverseExcitedDiagram reverse_excited_from_sf(const SkewShape& s, const Tableau& sf);

// Test oracle: closure of [lambda*/mu*] under reverse excited moves in [lambda*].
std::vector<std::pair<std::set<Cell>, std::map<Cell, Cell>>> reverse_excited_closure(
    const SkewShape& s);

struct DiagonalSet {
    std::vector<std::vector<Cell>> diagonals;  // index j = 1..mu_1
    std::set<Cell> b_cells;                    // B(D)
};

// Broken diagonals by the global column-string characterization.
DiagonalSet broken_diagonals(const SkewShape& s, const ReverseExcitedDiagram& D);

// Product of (lambda_i + d - j) over B(D).
Int broken_diagonal_weight(const SkewShape& s, const DiagonalSet& ds);

struct PeakSet {
    std::set<Cell> cells;
};

// Excited peaks of an OOE diagram by the closed form
// EP(D) = disjoint union over u of {(s, s + c(u)) : m_T(u) <= s < T(u)}.
PeakSet excited_peaks(const SkewShape& s, const ExcitedDiagram& D);

// p(D) = sum of w over EP(D), w(i,j) = lambda_{d+1-i} + i - j.
Int excited_peak_statistic(const SkewShape& s, const ExcitedDiagram& D);

// F(D): cells (i, j+1) of [lambda*] \ D with (i, j) in D.
PeakSet right_neighbors(const SkewShape& s, const ReverseExcitedDiagram& D);

// p*(D) = sum of (lambda_i + d - j) over F(D).
Int right_neighbor_statistic(const SkewShape& s, const ReverseExcitedDiagram& D);

}  // namespace skewtab
