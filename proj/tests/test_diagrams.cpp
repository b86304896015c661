#include <doctest.h>

#include <set>

#include "skewtab/counting.hpp"
#include "skewtab/diagrams.hpp"

using namespace skewtab;

namespace {

std::set<std::set<Cell>> cell_sets(const std::vector<ExcitedDiagram>& v) {
    std::set<std::set<Cell>> out;
    for (const auto& d : v) out.insert(d.cells);
    return out;
}

}  // namespace

TEST_CASE("excited diagrams via flags match the move closure") {
    for (const SkewShape& s : all_skew_shapes(8)) {
        auto via_flags = excited_diagrams(s);
        auto closure = excited_closure(s, [&](Cell u) { return s.outer().contains(u); });
        CHECK(via_flags.size() == closure.size());
        CHECK(cell_sets(via_flags) == cell_sets(closure));
        // |E| = |SSYT(mu, flags)| holds by construction; check flags directly
        std::vector<int> f = excited_flags(s);
        for (size_t i = 0; i < f.size(); ++i) CHECK(f[i] >= static_cast<int>(i) + 1);
    }
}

TEST_CASE("named excited diagram counts") {
    CHECK(excited_diagrams(parse_shape("2,2,2,1/1,1")).size() == 3);
    CHECK(excited_diagrams(parse_shape("3,1")).size() == 1);
    // thick reverse hooks carry the MacMahon box count
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                std::vector<int> outer(static_cast<size_t>(a + c), b + c);
                std::vector<int> inner(static_cast<size_t>(a), b);
                if (outer.empty()) continue;
                SkewShape s{Partition(outer), Partition(inner)};
                CHECK(Int(static_cast<long>(excited_diagrams(s).size())) ==
                      macmahon_box(a, b, c));
            }
}

TEST_CASE("OO excited diagrams: tableau image equals the filtered closure") {
    // explore the whole unbounded-row family E(Lambda^d/mu) and keep the
    // diagrams inside the upside-down shifted diagram
    for (const SkewShape& s : all_skew_shapes(7)) {
        int box = s.inner().part(1) + s.num_rows();
        auto via_oot = oo_excited_diagrams(s);
        auto closure = excited_closure(
            s,
            [&](Cell u) {
                return u.row >= 1 && u.row <= s.num_rows() && u.col >= 1 && u.col <= box;
            },
            [&](Cell u) { return ooe_ambient_contains(s, u); });
        CHECK(via_oot.size() == closure.size());
        CHECK(cell_sets(via_oot) == cell_sets(closure));
    }
    CHECK(oo_excited_diagrams(parse_shape("2,2,2,1/1,1")).size() == 6);
    CHECK(oo_excited_diagrams(parse_shape("4,2")).size() == 1);
}

TEST_CASE("slim shapes: E, OOE, and the unrestricted family coincide") {
    // lambda_d >= mu_1 + d - 1
    for (const char* txt : {"5,5,4/2,1", "4,4/2,2", "6,6,5/3,3,1"}) {
        SkewShape s = parse_shape(txt);
        REQUIRE(s.outer().part(s.num_rows()) >= s.inner().part(1) + s.num_rows() - 1);
        auto e = cell_sets(excited_diagrams(s));
        auto ooe = cell_sets(oo_excited_diagrams(s));
        CHECK(e == ooe);
        CHECK(e.size() ==
              enumerate_ssyt(SkewShape(s.inner(), {}), s.num_rows()).size());
    }
}

TEST_CASE("reverse excited diagrams") {
    CHECK(reverse_excited_diagrams(parse_shape("2,2,2,1/1,1")).size() == 6);
    CHECK(reverse_excited_diagrams(parse_shape("2,2/2,2")).size() == 1);
    CHECK(reverse_excited_diagrams(zigzag(3)).size() == 3);
    for (const SkewShape& s : all_skew_shapes(7)) {
        auto via_sf = reverse_excited_diagrams(s);
        auto closure = reverse_excited_closure(s);
        CHECK(via_sf.size() == closure.size());
        std::set<std::set<Cell>> a, b;
        for (const auto& d : via_sf) a.insert(d.cells);
        for (const auto& st : closure) b.insert(st.first);
        CHECK(a == b);
    }
}

TEST_CASE("broken diagonals: global characterization vs move replay") {
    for (const SkewShape& s : all_skew_shapes(7)) {
        int d = s.num_rows();
        // replay oracle: initial diagonals, updated move by move
        using Diags = std::vector<std::set<Cell>>;
        Partition mc = conjugate(s.inner());
        Diags init(static_cast<size_t>(mc.length()));
        for (int j = 1; j <= mc.length(); ++j)
            for (int r = 1; r <= mc.part(j); ++r)
                init[static_cast<size_t>(j - 1)].insert({r, r + j + d - 1 - mc.part(j)});
        std::map<std::set<Cell>, Diags> replay;
        std::set<Cell> start;
        for (Cell u : s.shifted_cells()) start.insert(u);
        replay[start] = init;
        std::vector<std::set<Cell>> queue = {start};
        while (!queue.empty()) {
            std::set<Cell> cur = queue.back();
            queue.pop_back();
            Diags diag = replay[cur];
            for (Cell c : cur) {
                Cell nw{c.row - 1, c.col - 1}, up{c.row - 1, c.col}, left{c.row, c.col - 1};
                if (!s.shifted_outer_contains(nw)) continue;
                if (cur.count(nw) || cur.count(up) || cur.count(left)) continue;
                std::set<Cell> next = cur;
                next.erase(c);
                next.insert(nw);
                // update: the unique diagonal holding (row-1, col) swaps it for c
                Diags nd = diag;
                int holder = -1;
                for (size_t t = 0; t < nd.size(); ++t)
                    if (nd[t].count(up)) {
                        REQUIRE(holder == -1);  // uniqueness of the broken diagonal
                        holder = static_cast<int>(t);
                    }
                REQUIRE(holder >= 0);
                nd[static_cast<size_t>(holder)].erase(up);
                nd[static_cast<size_t>(holder)].insert(c);
                auto it = replay.find(next);
                if (it == replay.end()) {
                    replay[next] = nd;
                    queue.push_back(next);
                } else {
                    CHECK(it->second == nd);  // well-definedness
                }
            }
        }
        for (const ReverseExcitedDiagram& D : reverse_excited_diagrams(s)) {
            DiagonalSet ds = broken_diagonals(s, D);
            CHECK(Int(static_cast<long>(ds.b_cells.size())) == s.inner().size());
            // pairwise disjoint
            size_t total = 0;
            for (const auto& diag : ds.diagonals) total += diag.size();
            CHECK(total == ds.b_cells.size());
            for (const Cell& c : ds.b_cells) CHECK(!D.cells.count(c));
            // matches the replay oracle
            auto it = replay.find(D.cells);
            REQUIRE(it != replay.end());
            Diags want = it->second;
            for (size_t j = 0; j < want.size(); ++j) {
                std::set<Cell> got(ds.diagonals[j].begin(), ds.diagonals[j].end());
                CHECK(got == want[j]);
            }
        }
    }
}

TEST_CASE("broken diagonal weights on the running example") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    std::multiset<Int> products;
    for (const ReverseExcitedDiagram& D : reverse_excited_diagrams(s))
        products.insert(broken_diagonal_weight(s, broken_diagonals(s, D)));
    CHECK(products == std::multiset<Int>{6, 6, 6, 3, 3, 3});
}

TEST_CASE("excited peaks: closed form vs move replay over E(Lambda^d/mu)") {
    for (const SkewShape& s : all_skew_shapes(7)) {
        int box = s.inner().part(1) + s.num_rows();
        // replay EP through the unbounded-row closure
        std::map<std::map<Cell, Cell>, std::set<Cell>> replay;
        std::vector<ExcitedDiagram> queue;
        ExcitedDiagram init;
        for (Cell u : Partition(s.inner()).cells()) {
            init.cells.insert(u);
            init.origin[u] = u;
        }
        replay[init.origin] = {};
        queue.push_back(init);
        while (!queue.empty()) {
            ExcitedDiagram cur = queue.back();
            queue.pop_back();
            std::set<Cell> ep = replay[cur.origin];
            for (const auto& [orig, c] : cur.origin) {
                Cell se{c.row + 1, c.col + 1}, right{c.row, c.col + 1}, down{c.row + 1, c.col};
                if (se.row > s.num_rows() || se.col > box) continue;
                if (cur.cells.count(se) || cur.cells.count(right) || cur.cells.count(down))
                    continue;
                ExcitedDiagram next = cur;
                next.cells.erase(c);
                next.cells.insert(se);
                next.origin[orig] = se;
                std::set<Cell> nep = ep;
                nep.insert(c);
                nep.erase(right);
                nep.erase(down);
                auto it = replay.find(next.origin);
                if (it == replay.end()) {
                    replay[next.origin] = nep;
                    queue.push_back(next);
                } else {
                    CHECK(it->second == nep);  // order independence
                }
            }
        }
        for (const ExcitedDiagram& D : oo_excited_diagrams(s)) {
            auto it = replay.find(D.origin);
            REQUIRE(it != replay.end());
            CHECK(excited_peaks(s, D).cells == it->second);
        }
    }
}

TEST_CASE("single move vacates exactly one peak; minimal diagram has none") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    for (const ExcitedDiagram& D : oo_excited_diagrams(s)) {
        bool minimal = true;
        for (Cell u : D.tab.shape().cells())
            if (D.tab.at(u.row, u.col) != u.row) minimal = false;
        if (minimal) CHECK(excited_peaks(s, D).cells.empty());
    }
}

TEST_CASE("right neighbors on the running example") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    std::multiset<Int> stats;
    for (const ReverseExcitedDiagram& D : reverse_excited_diagrams(s))
        stats.insert(right_neighbor_statistic(s, D));
    CHECK(stats == std::multiset<Int>{0, 2, 3, 4, 5, 6});
    CHECK(right_neighbors(parse_shape("2,2/2,2"),
                          reverse_excited_diagrams(parse_shape("2,2/2,2"))[0])
              .cells.empty());
}

TEST_CASE("peak statistics match the tableau statistics") {
    for (const SkewShape& s : all_skew_shapes(7)) {
        auto oots = enumerate_oot(s);
        auto ooes = oo_excited_diagrams(s);
        REQUIRE(oots.size() == ooes.size());
        for (size_t i = 0; i < oots.size(); ++i) {
            TableauStats st = tableau_statistics(s, oots[i]);
            CHECK(excited_peak_statistic(s, ooes[i]) == st.p);
        }
        auto sfs = enumerate_sf(s);
        auto res = reverse_excited_diagrams(s);
        REQUIRE(sfs.size() == res.size());
        for (size_t i = 0; i < oots.size(); ++i) {
            // pair the RE diagram through Phi
            Tableau u = phi_oot_to_sf(s, oots[i]);
            ReverseExcitedDiagram D = reverse_excited_from_sf(s, u);
            TableauStats st = tableau_statistics(s, oots[i]);
            CHECK(right_neighbor_statistic(s, D) == st.p_star);
        }
    }
}
