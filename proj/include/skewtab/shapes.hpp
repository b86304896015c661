#pragma once

#include <string>
#include <vector>

#include "skewtab/numeric.hpp"

namespace skewtab {

// 1-based matrix coordinates: row grows downward, column to the right.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline int content(Cell u) { return u.col - u.row; }

// Weakly decreasing positive parts; trailing zeros are stripped at construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    long size() const;
    // 1-based part access; zero beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const;
    bool contains(Cell u) const {
        return u.row >= 1 && u.col >= 1 && u.col <= part(u.row);
    }
    std::vector<Cell> cells() const;  // row-major

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// hook length lambda_i + lambda'_j - i - j + 1; u must lie in [p]
Int hook(const Partition& p, Cell u);

Int hook_product(const Partition& p);

// f^lambda by the hook length formula.
Int hook_length_count(const Partition& p);

// |SSYT(lambda, L)| by the hook content formula.
Int hook_content_count(const Partition& p, long bound);

// b(lambda) = sum_i C(lambda'_i, 2)
long b_statistic(const Partition& p);

// Skew shape lambda/mu.  d = l(lambda) is part of the data: the inner shape is
// padded with zeros to d parts, and every formula below quantifies over d rows.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int num_rows() const { return outer_.length(); }  // d
    long size() const { return outer_.size() - inner_.size(); }
    bool cell_in(Cell u) const {
        return outer_.contains(u) && !inner_.contains(u);
    }
    std::vector<Cell> cells() const;  // row-major
    bool is_empty() const { return size() == 0; }

    SkewShape conjugate() const;

    // Shifted skew diagram [lambda*/mu*]: row i spans columns
    // mu_i + d .. lambda_i + d - 1 (the plain diagram pushed right by d-1,
    // staggered one column per row).
    std::vector<Cell> shifted_cells() const;
    bool shifted_outer_contains(Cell u) const;  // u in [lambda*]
    int shifted_outer_part(int i) const {       // lambda*_i = lambda_i + d - i
        return outer_.part(i) + num_rows() - i;
    }
    int shifted_inner_part(int i) const {  // mu*_i = mu_i + d - i
        return inner_.part(i) + num_rows() - i;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
};

// Text grammar: comma-separated parts, slash-separated outer/inner,
// e.g. "2,2,2,1/1,1".  "0" or an empty string denotes the empty partition.
Partition parse_partition(const std::string& text);
SkewShape parse_shape(const std::string& text);

// Staircase delta_n = (n-1, n-2, ..., 1); delta_0 = delta_1 = {}.
Partition staircase(int n);

// Zigzag sigma_n = delta_{n+1}/delta_{n-1}, a ribbon with 2n-1 cells.
SkewShape zigzag(int n);

// sigma_n^{(k)}: sigma_{n-k} shifted down k rows, realized inside delta_{n+1}.
SkewShape shifted_zigzag(int n, int k);

// Thick zigzag delta_{n+2k}/delta_n.
SkewShape thick_zigzag(int n, int k);

// All partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

// All partitions mu contained in lambda (including empty and lambda itself).
std::vector<Partition> subpartitions(const Partition& lambda);

// Every skew shape lambda/mu with |lambda| <= max_outer_size.
std::vector<SkewShape> all_skew_shapes(int max_outer_size);

// --- strips and outside decompositions -----------------------------------

// A connected skew diagram with no 2x2 square; contents of its cells occupy
// every integer in [min_content, max_content] exactly once.
struct Strip {
    std::vector<Cell> cells;  // sorted by content
    int min_content = 0;
    int max_content = -1;  // empty strip: max < min

    bool empty() const { return cells.empty(); }
};

Strip make_strip(std::vector<Cell> cells);

// Substrip theta[a, b] of a strip by content interval; b = a-1 gives the
// empty strip, b < a-1 is undefined (the determinant convention maps the
// former to 1 and the latter to 0).
enum class SubstripKind { Proper, Empty, Undefined };
struct Substrip {
    SubstripKind kind = SubstripKind::Undefined;
    Strip strip;
};
Substrip substrip(const Strip& theta, int a, int b);

struct OutsideDecomposition {
    Strip cutting_strip;
    std::vector<Strip> strips;  // partition the cells of the parent shape
};

// Outer border strip of lambda: the cells (i,j) of [lambda] with (i+1,j+1)
// not in [lambda].
Strip border_strip(const Partition& lambda);

// Lascoux-Pragacz decomposition: connected components of the intersections
// of [lambda/mu] with NW-SE translates of the border strip of lambda.
OutsideDecomposition lascoux_pragacz(const SkewShape& s);

// theta_i # theta_j placed on the border strip of lambda must be [lambda/nu]
// for a partition nu; returns nu.  Throws InternalError if the complement is
// not a Young diagram (the decomposition guarantees it is).
Partition complement_partition(const Partition& lambda, const Strip& piece);

}  // namespace skewtab
