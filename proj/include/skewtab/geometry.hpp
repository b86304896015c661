#pragma once

#include <optional>

#include "skewtab/diagrams.hpp"

namespace skewtab {

/* Triangular-lattice coordinates for the region nabla*_{lambda/mu}:
 * a horizontal edge spans two x-units, a diagonal edge one unit in x and y.
 * Band r (r = 1..d) lies between heights r-1 and r.  Up-triangles U(x, r)
 * stand on [x, x+2] at height r-1; down-triangles D(x, r) hang from [x, x+2]
 * at height r.  Band r runs from the left wall (down-triangle at x = -r)
 * to the staircase step (down-triangle at x = 2*lambda_{d+1-r} + r - 2).
 * The top boundary of nabla* has a notch at x = 2*mu_t + d - 2t for each
 * t = 1..d; those down-triangles are missing from band d.  nabla adds a peak
 * up-triangle above each notch, and the canonical correspondence covers the
 * pair with a vertical lozenge. */

enum class LozengeType { Vertical, NWSE, NESW };

struct Lozenge {
    LozengeType type;
    int band;  // for NWSE/NESW: the band; for Vertical: the band of the lower half
    int x;     // for NWSE/NESW: x of the up-triangle; for Vertical: x of both halves

    friend bool operator==(const Lozenge&, const Lozenge&) = default;
    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct TriRegion {
    SkewShape shape;
    int d = 0;

    explicit TriRegion(SkewShape s);

    int right_step_x(int band) const;  // x of the staircase down-triangle
    bool has_up(int x, int band) const;
    bool has_down(int x, int band) const;
    bool is_notch(int x) const;                  // band-d down-triangle missing
    std::vector<int> notch_positions() const;    // ascending x
    long up_count() const;
};

class LozengeTiling {
public:
    LozengeTiling(SkewShape shape, std::vector<Lozenge> lozenges);

    const SkewShape& shape() const { return shape_; }
    const TriRegion& region() const { return region_; }
    const std::vector<Lozenge>& lozenges() const { return lozenges_; }

    // NWSE lozenges carry the formula weights.
    std::vector<Lozenge> weighted_rhombi() const;
    // w(r): distance from the rhombus to the right wall at its height.
    Int rhombus_weight(const Lozenge& l) const;
    Int weight_product() const;

    // which lozenge covers a triangle
    const Lozenge& lozenge_at_up(int x, int band) const;
    const Lozenge& lozenge_at_down(int x, int band) const;

    friend bool operator==(const LozengeTiling&, const LozengeTiling&);

private:
    void validate() const;  // exact cover
    SkewShape shape_;
    TriRegion region_;
    std::vector<Lozenge> lozenges_;
    std::map<std::pair<int, int>, size_t> up_index_, down_index_;
};

// Bijection R (with Phi for the column data): OOT tableau -> tiling.
LozengeTiling tiling_from_oot(const SkewShape& s, const Tableau& oot);

// Inverse of R: read T off the green paths' NW-SE crossings.
Tableau oot_from_tiling(const LozengeTiling& t);

// Map B: tiling -> SF(lambda/mu) (green paths' NE-SW crossings).
Tableau sf_from_tiling(const LozengeTiling& t);

// All tilings of nabla*_{lambda/mu}, in OOT enumeration order.
std::vector<LozengeTiling> enumerate_tilings(const SkewShape& s);

// Shears: SW-NE lozenges to reverse excited cells, NW-SE lozenges (flipped)
// to OO excited cells.
ReverseExcitedDiagram tiling_to_re(const LozengeTiling& t);
ExcitedDiagram tiling_to_ooe(const LozengeTiling& t);

// One green path: per band crossed, the lozenge and its kind.
struct PathStep {
    int band = 0;   // band crossed (1..d)
    int depth = 0;  // d + 1 - band
    int x_in = 0;   // x of the bottom edge entering the band
    LozengeType kind = LozengeType::Vertical;  // NWSE or NESW
};
struct PathSystems {
    std::vector<std::vector<PathStep>> green;  // per column i = 1..lambda_1
    // red/blue paths as vertex chains (x, y); red crosses vertical+NWSE,
    // blue crosses vertical+NESW lozenges.
    std::vector<std::vector<std::pair<int, int>>> red;
    std::vector<std::vector<std::pair<int, int>>> blue;
};
PathSystems path_systems(const LozengeTiling& t);

}  // namespace skewtab
