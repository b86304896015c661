#include "skewtab/diagrams.hpp"

#include <algorithm>

namespace skewtab {

std::vector<int> excited_flags(const SkewShape& s) {
    std::vector<int> flags;
    for (int i = 1; i <= s.inner().length(); ++i) {
        int f = i;
        while (f + 1 <= s.num_rows() &&
               s.outer().part(f + 1) - (f + 1) >= s.inner().part(i) - i)
            ++f;
        flags.push_back(f);
    }
    return flags;
}

namespace {

ExcitedDiagram diagram_from_tableau(const Tableau& T) {
    ExcitedDiagram D;
    D.tab = T;
    for (Cell u : T.shape().cells()) {
        int t = T.at(u.row, u.col);
        Cell v{t, u.col - u.row + t};
        D.cells.insert(v);
        D.origin[u] = v;
    }
    return D;
}

}  // namespace

std::vector<ExcitedDiagram> excited_diagrams(const SkewShape& s) {
    std::vector<int> f = excited_flags(s);
    FlagVector flags;
    for (size_t i = 0; i < f.size(); ++i) {
        flags.lower.push_back(1);
        flags.upper.push_back(f[i]);
    }
    std::vector<ExcitedDiagram> out;
    for (const Tableau& T : enumerate_ssyt(SkewShape(s.inner(), {}), flags))
        out.push_back(diagram_from_tableau(T));
    return out;
}

bool ooe_ambient_contains(const SkewShape& s, Cell u) {
    int d = s.num_rows();
    if (u.row < 1 || u.row > d || u.col < 1) return false;
    return u.col <= s.outer().part(d + 1 - u.row) + u.row - 1;
}

std::vector<ExcitedDiagram> oo_excited_diagrams(const SkewShape& s) {
    std::vector<ExcitedDiagram> out;
    for (const Tableau& T : enumerate_oot(s)) out.push_back(diagram_from_tableau(T));
    return out;
}

std::vector<ExcitedDiagram> excited_closure(
    const SkewShape& s, const std::function<bool(Cell)>& ambient,
    const std::function<bool(Cell)>& keep) {
    using State = std::pair<std::set<Cell>, std::vector<std::pair<Cell, Cell>>>;
    std::set<State> seen;
    std::vector<ExcitedDiagram> out;
    std::vector<Cell> mu_cells = Partition(s.inner()).cells();

    ExcitedDiagram init;
    for (Cell u : mu_cells) {
        init.cells.insert(u);
        init.origin[u] = u;
    }
    std::vector<ExcitedDiagram> queue = {init};
    auto key = [](const ExcitedDiagram& D) {
        return State{D.cells, {D.origin.begin(), D.origin.end()}};
    };
    auto kept = [&](const ExcitedDiagram& D) {
        if (!keep) return true;
        for (Cell c : D.cells)
            if (!keep(c)) return false;
        return true;
    };
    seen.insert(key(init));
    while (!queue.empty()) {
        ExcitedDiagram D = std::move(queue.back());
        queue.pop_back();
        if (kept(D)) out.push_back(D);
        for (const auto& [orig, cur] : D.origin) {
            Cell se{cur.row + 1, cur.col + 1};
            Cell right{cur.row, cur.col + 1};
            Cell down{cur.row + 1, cur.col};
            // only the landing cell must exist in the ambient; the vacated
            // corner cells merely have to be free
            if (!ambient(se)) continue;
            if (D.cells.count(se) || D.cells.count(right) || D.cells.count(down)) continue;
            ExcitedDiagram next = D;
            next.cells.erase(cur);
            next.cells.insert(se);
            next.origin[orig] = se;
            if (seen.insert(key(next)).second) queue.push_back(next);
        }
    }
    // rebuild the tableaux for the closure output
    for (ExcitedDiagram& D : out) {
        std::vector<std::vector<int>> rows(static_cast<size_t>(s.inner().length()));
        for (Cell u : mu_cells)
            rows[static_cast<size_t>(u.row - 1)].push_back(D.origin[u].row);
        D.tab = Tableau(SkewShape(s.inner(), {}), std::move(rows));
    }
    return out;
}

ReverseExcitedDiagram reverse_excited_from_sf(const SkewShape& s, const Tableau& sf) {
    int d = s.num_rows();
    ReverseExcitedDiagram D;
    D.sf = sf;
    for (Cell u : s.cells()) {
        int k = sf.at(u.row, u.col);   // target row, k <= i
        int a = u.row - k;             // number of reverse moves
        Cell shifted{u.row, u.col + d - 1};
        Cell cur{k, u.col + d - 1 - a};
        D.cells.insert(cur);
        D.origin[shifted] = cur;
    }
    if (D.cells.size() != static_cast<size_t>(s.size()))
        throw InternalError("reverse excited diagram: cells collide");
    return D;
}

std::vector<ReverseExcitedDiagram> reverse_excited_diagrams(const SkewShape& s) {
    std::vector<ReverseExcitedDiagram> out;
    for (const Tableau& U : enumerate_sf(s)) out.push_back(reverse_excited_from_sf(s, U));
    return out;
}

std::vector<std::pair<std::set<Cell>, std::map<Cell, Cell>>> reverse_excited_closure(
    const SkewShape& s) {
    using State = std::pair<std::set<Cell>, std::map<Cell, Cell>>;
    std::set<State> seen;
    std::vector<State> out;
    State init;
    for (Cell u : s.shifted_cells()) {
        init.first.insert(u);
        init.second[u] = u;
    }
    std::vector<State> queue = {init};
    seen.insert(init);
    while (!queue.empty()) {
        State D = std::move(queue.back());
        queue.pop_back();
        out.push_back(D);
        for (const auto& [orig, cur] : D.second) {
            Cell nw{cur.row - 1, cur.col - 1};
            Cell up{cur.row - 1, cur.col};
            Cell left{cur.row, cur.col - 1};
            // moves stay weakly above the shifted diagonal on their own; the
            // left corner cell may fall outside [lambda*] and only needs to
            // be free
            if (!s.shifted_outer_contains(nw)) continue;
            if (D.first.count(nw) || D.first.count(up) || D.first.count(left)) continue;
            State next = D;
            next.first.erase(cur);
            next.first.insert(nw);
            next.second[orig] = nw;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return out;
}

DiagonalSet broken_diagonals(const SkewShape& s, const ReverseExcitedDiagram& D) {
    int d = s.num_rows();
    Partition lc = conjugate(s.outer());
    Partition mc = conjugate(s.inner());
    DiagonalSet ds;
    ds.diagonals.assign(static_cast<size_t>(mc.length()), {});
    for (int j = 1; j <= mc.length(); ++j) {
        auto& diag = ds.diagonals[static_cast<size_t>(j - 1)];
        int top = mc.part(j);            // mu'_j >= 1 here
        int bot = lc.part(j);            // lambda'_j
        // moves of the cells of column j, rows top+1..bot
        auto moves = [&](int i) { return i - D.sf.at(i, j); };
        auto push_run = [&](Cell from, int count) {
            Cell c = from;
            for (int t = 0; t < count; ++t) {
                diag.push_back(c);
                ds.b_cells.insert(c);
                c = {c.row + 1, c.col + 1};
            }
        };
        // string from the top boundary to the first excited cell
        int a_top = (top + 1 <= bot) ? moves(top + 1) : 0;
        push_run({1, j + d - top}, top - a_top);
        // strings between consecutive excited cells, then to the shape floor
        for (int i = top + 1; i <= bot; ++i) {
            int a_i = moves(i);
            int a_next = (i + 1 <= bot) ? moves(i + 1) : 0;
            push_run({i - a_i + 1, j + d - a_i}, a_i - a_next);
        }
    }
    for (const Cell& c : ds.b_cells)
        if (D.cells.count(c))
            throw InternalError("broken diagonals: not disjoint from the diagram");
    return ds;
}

Int broken_diagonal_weight(const SkewShape& s, const DiagonalSet& ds) {
    Int w = 1;
    for (Cell c : ds.b_cells) w *= s.outer().part(c.row) + s.num_rows() - c.col;
    return w;
}

PeakSet excited_peaks(const SkewShape&, const ExcitedDiagram& D) {
    PeakSet out;
    for (Cell u : D.tab.shape().cells()) {
        int lo = 1;
        const Tableau& T = D.tab;
        if (T.has_cell(u.row, u.col - 1)) lo = std::max(lo, T.at(u.row, u.col - 1));
        if (T.has_cell(u.row - 1, u.col)) lo = std::max(lo, T.at(u.row - 1, u.col) + 1);
        for (int k = lo; k < T.at(u.row, u.col); ++k)
            out.cells.insert({k, k + content(u)});
    }
    for (Cell c : out.cells)
        if (D.cells.count(c)) throw InternalError("excited peaks: peak inside diagram");
    return out;
}

Int excited_peak_statistic(const SkewShape& s, const ExcitedDiagram& D) {
    int d = s.num_rows();
    Int total = 0;
    for (Cell c : excited_peaks(s, D).cells)
        total += s.outer().part(d + 1 - c.row) + c.row - c.col;
    return total;
}

PeakSet right_neighbors(const SkewShape& s, const ReverseExcitedDiagram& D) {
    PeakSet out;
    for (Cell c : D.cells) {
        Cell r{c.row, c.col + 1};
        if (s.shifted_outer_contains(r) && !D.cells.count(r)) out.cells.insert(r);
    }
    return out;
}

Int right_neighbor_statistic(const SkewShape& s, const ReverseExcitedDiagram& D) {
    Int total = 0;
    for (Cell c : right_neighbors(s, D).cells)
        total += s.outer().part(c.row) + s.num_rows() - c.col;
    return total;
}

}  // namespace skewtab
