#include <doctest.h>

#include <set>

#include "skewtab/shapes.hpp"

using namespace skewtab;

TEST_CASE("conjugate on named partitions") {
    CHECK(conjugate(parse_partition("2,2,2,1")) == parse_partition("4,3"));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(staircase(5)) == staircase(5));  // staircases are self-conjugate
}

TEST_CASE("conjugate is an involution (exhaustive up to 12 cells)") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("hook lengths") {
    Partition p = parse_partition("2,2,2,1");
    CHECK(hook(p, {1, 1}) == 5);
    CHECK(hook(parse_partition("1"), {1, 1}) == 1);
    // first column of the staircase: odd hooks 7, 5, 3, 1
    Partition d5 = staircase(5);
    std::vector<Int> want = {7, 5, 3, 1};
    for (int i = 1; i <= 4; ++i) CHECK(hook(d5, {i, 1}) == want[static_cast<size_t>(i - 1)]);
    CHECK_THROWS_AS(hook(p, {1, 3}), DomainError);
}

TEST_CASE("hook length against the brute count of hook cells") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            Partition pc = conjugate(p);
            for (Cell u : p.cells()) {
                long arm = p.part(u.row) - u.col;
                long leg = pc.part(u.col) - u.row;
                CHECK(hook(p, u) == arm + leg + 1);
            }
        }
}

TEST_CASE("hook sum computed row-wise equals the conjugate computation") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n)) {
            Int rows = 0, cols = 0;
            for (Cell u : p.cells()) rows += hook(p, u);
            Partition pc = conjugate(p);
            for (Cell u : pc.cells()) cols += hook(pc, u);
            CHECK(rows == cols);
        }
}

TEST_CASE("shifted skew diagram") {
    SkewShape s = parse_shape("2,2,2,1/1,1");
    auto cells = s.shifted_cells();
    CHECK(cells.size() == 5);  // cell count equals |lambda/mu|
    // row i runs from mu_i + d to lambda_i + d - 1
    CHECK(s.shifted_outer_part(1) == 5);
    CHECK(s.shifted_outer_part(2) == 4);
    CHECK(s.shifted_outer_part(3) == 3);
    CHECK(s.shifted_outer_part(4) == 1);
    CHECK(s.shifted_inner_part(1) == 4);
    CHECK(s.shifted_inner_part(2) == 3);

    CHECK(parse_shape("2,2/2,2").shifted_cells().empty());
    SkewShape row = parse_shape("2/0");
    CHECK(row.shifted_cells() == std::vector<Cell>{{1, 1}, {1, 2}});
}

TEST_CASE("shape parsing") {
    CHECK(parse_shape("2,2,2,1/1,1").outer() == parse_partition("2,2,2,1"));
    CHECK(parse_shape("3,2,1").inner() == Partition{});
    CHECK(parse_shape("2/0").inner() == Partition{});
    CHECK_THROWS_AS(parse_partition("2,x"), DomainError);
    CHECK_THROWS_AS(parse_partition("1,2"), DomainError);
    // inner with more parts than outer is rejected
    CHECK_THROWS_AS(parse_shape("2,2/1,1,1"), DomainError);
    CHECK_THROWS_AS(parse_shape("2,2/3"), DomainError);
}

TEST_CASE("zigzag shapes") {
    CHECK(zigzag(3) == SkewShape(parse_partition("3,2,1"), parse_partition("1")));
    CHECK(thick_zigzag(2, 1) == SkewShape(parse_partition("3,2,1"), parse_partition("1")));
    CHECK(zigzag(3).size() == 5);
    CHECK(zigzag(1) == SkewShape(parse_partition("1"), {}));
    CHECK_THROWS_AS(zigzag(0), DomainError);
    CHECK_THROWS_AS(shifted_zigzag(2, 2), DomainError);
}

TEST_CASE("shifted zigzag equals the plain zigzag pushed down") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            SkewShape s = shifted_zigzag(n, k);
            CHECK(s.outer() == staircase(n + 1));
            // cell-set equality with sigma_{n-k} shifted down k rows
            std::vector<Cell> want;
            for (Cell u : zigzag(n - k).cells()) want.push_back({u.row + k, u.col});
            CHECK(s.cells() == want);
        }
    // the displayed shape for sigma_5^(2)
    SkewShape s52 = shifted_zigzag(5, 2);
    CHECK(s52.outer() == staircase(6));
    CHECK(s52.inner() == parse_partition("5,4,1"));
}

TEST_CASE("border strips and Lascoux-Pragacz decomposition") {
    SUBCASE("a connected border strip decomposes into itself") {
        SkewShape s = zigzag(3);
        OutsideDecomposition dec = lascoux_pragacz(s);
        REQUIRE(dec.strips.size() == 1);
        CHECK(dec.strips[0].cells.size() == 5);
    }
    SUBCASE("thick zigzag strips are the nested zigzags") {
        for (int n = 0; n <= 3; ++n)
            for (int k = 1; n + 2 * k <= 8; ++k) {
                OutsideDecomposition dec = lascoux_pragacz(thick_zigzag(n, k));
                CHECK(dec.strips.size() == static_cast<size_t>(k));
            }
    }
    SUBCASE("strips partition the cells, |lambda| <= 8") {
        for (const SkewShape& s : all_skew_shapes(8)) {
            if (s.is_empty()) continue;
            OutsideDecomposition dec = lascoux_pragacz(s);
            std::set<Cell> seen;
            size_t total = 0;
            for (const Strip& st : dec.strips) {
                total += st.cells.size();
                for (Cell u : st.cells) {
                    CHECK(s.cell_in(u));
                    CHECK(seen.insert(u).second);
                }
            }
            CHECK(total == static_cast<size_t>(s.size()));
            // every theta_i # theta_j placed on the border strip leaves a
            // partition-shaped complement
            for (const Strip& a : dec.strips)
                for (const Strip& b : dec.strips) {
                    Substrip sub = substrip(dec.cutting_strip, a.min_content, b.max_content);
                    if (sub.kind != SubstripKind::Proper) continue;
                    Partition nu = complement_partition(s.outer(), sub.strip);
                    CHECK(s.outer().contains(nu));
                }
        }
    }
    SUBCASE("332/11 reassembles exactly once") {
        OutsideDecomposition dec = lascoux_pragacz(parse_shape("3,3,2/1,1"));
        size_t total = 0;
        for (const Strip& st : dec.strips) total += st.cells.size();
        CHECK(total == 6);
    }
}

TEST_CASE("subpartitions and shape scans") {
    CHECK(subpartitions(parse_partition("2,1")).size() == 5);
    CHECK(all_skew_shapes(3).size() > 0);
    // d = l(lambda) is preserved with padded inner shapes
    SkewShape s(parse_partition("2,2"), parse_partition("1"));
    CHECK(s.num_rows() == 2);
    CHECK(s.inner().part(2) == 0);
}
