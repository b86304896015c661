#pragma once

#include "skewtab/geometry.hpp"

namespace skewtab {

/* Equilateral puzzle triangle of side N, apex up.  Row r (1..N from the top)
 * holds up-triangles T(r,c), c = 1..r, interleaved with down-triangles
 * V(r,c), c = 1..r-1.  Shared edges:
 *   h[r][c] : T(r,c).S   <-> V(r+1,c).N      (horizontal)
 *   b[r][c] : T(r,c).NE  <-> V(r,c).SW       (NW-SE direction)
 *   a[r][c] : V(r,c).SE  <-> T(r,c+1).NW     (SW-NE direction)
 * Boundary: T(r,1).NW on the northwest side (read bottom-left to apex as
 * position N+1-r), T(r,r).NE on the northeast side (position r), T(N,c).S on
 * the bottom (position c).
 *
 * Labels: 0, 1, and four glue marks pairing the two halves of a rhombus
 * piece.  The catalog per up-triangle (NW, NE, S) is
 *   (0,0,0)  (1,1,1)  (1,0,gV)  (0,1,gE)  (gN,1,0)  (0,gW,1)
 * and per down-triangle (N, SW, SE)
 *   (0,0,0)  (1,1,1)  (gV,0,1)  (gE,1,0)  (0,1,gN)  (1,gW,0).
 * gV glues the vertical rhombus, gE the (never rotated) equivariant piece,
 * gN the NW-SE rhombus, gW the SW-NE rhombus. */

enum : int { L0 = 0, L1 = 1, LGV = 2, LGE = 3, LGN = 4, LGW = 5 };

class KTPuzzle {
public:
    KTPuzzle() = default;
    KTPuzzle(int side, std::vector<std::vector<int>> h, std::vector<std::vector<int>> a,
             std::vector<std::vector<int>> b, std::vector<int> nw, std::vector<int> ne,
             std::vector<int> bottom);

    int side() const { return side_; }
    // edge accessors for up/down triangles (1-based row/col)
    int up_nw(int r, int c) const { return c == 1 ? nw_[static_cast<size_t>(side_ - r)] : a_at(r, c - 1); }
    int up_ne(int r, int c) const { return c == r ? ne_[static_cast<size_t>(r - 1)] : b_at(r, c); }
    int up_s(int r, int c) const { return r == side_ ? bottom_[static_cast<size_t>(c - 1)] : h_at(r, c); }
    int down_n(int r, int c) const { return h_at(r - 1, c); }
    int down_sw(int r, int c) const { return b_at(r, c); }
    int down_se(int r, int c) const { return a_at(r, c); }

    const std::vector<int>& nw_word() const { return nw_; }
    const std::vector<int>& ne_word() const { return ne_; }
    const std::vector<int>& bottom_word() const { return bottom_; }

    struct EqPiece {
        int row;     // row of the upper triangle
        int col;
        int height;  // distance from the piece center to the bottom edge
    };
    std::vector<EqPiece> equivariant_pieces() const;
    Int height_product() const;

    // Checks the piece catalog, glue pairing, and 0/1 boundary; throws
    // StructureError naming the violated rule.
    void validate() const;

    friend bool operator==(const KTPuzzle&, const KTPuzzle&) = default;
    friend auto operator<=>(const KTPuzzle&, const KTPuzzle&) = default;

private:
    int h_at(int r, int c) const { return h_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int a_at(int r, int c) const { return a_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int b_at(int r, int c) const { return b_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

    int side_ = 0;
    std::vector<std::vector<int>> h_, a_, b_;
    std::vector<int> nw_, ne_, bottom_;

    friend class PuzzleBuilder;
};

// w_lambda inside a rows x cols box: one bit per step of the boundary path
// from bottom-left to top-right, 0 = up, 1 = right.
std::vector<int> boundary_word(const Partition& p, int rows, int cols);

// Exhaustive search over Delta^{mu nu}_{lambda} with the given box; the
// boundary reads (w_mu, w_nu, w_lambda) on (NW, NE, bottom).
std::vector<KTPuzzle> enumerate_puzzles(const Partition& mu, const Partition& nu,
                                        const Partition& lambda, int box_rows,
                                        int box_cols, int budget_side = 14);

// Term-by-term correspondence with lozenge tilings of nabla_{lambda/mu}.
KTPuzzle puzzle_from_tiling(const LozengeTiling& t);
LozengeTiling tiling_from_puzzle(const KTPuzzle& p, const SkewShape& s);

}  // namespace skewtab
