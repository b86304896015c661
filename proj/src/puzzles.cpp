#include "skewtab/puzzles.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace skewtab {

namespace {

constexpr std::array<std::array<int, 3>, 6> kUpCatalog = {{
    {L0, L0, L0},    // 0-triangle
    {L1, L1, L1},    // 1-triangle
    {L1, L0, LGV},   // vertical rhombus, upper half
    {L0, L1, LGE},   // equivariant piece, upper half
    {LGN, L1, L0},   // NW-SE rhombus, right half
    {L0, LGW, L1},   // SW-NE rhombus, left half
}};

constexpr std::array<std::array<int, 3>, 6> kDownCatalog = {{
    {L0, L0, L0},
    {L1, L1, L1},
    {LGV, L0, L1},
    {LGE, L1, L0},
    {L0, L1, LGN},   // NW-SE rhombus, left half
    {L1, LGW, L0},   // SW-NE rhombus, right half
}};

bool is_boundary_label(int v) { return v == L0 || v == L1; }

}  // namespace

KTPuzzle::KTPuzzle(int side, std::vector<std::vector<int>> h,
                   std::vector<std::vector<int>> a, std::vector<std::vector<int>> b,
                   std::vector<int> nw, std::vector<int> ne, std::vector<int> bottom)
    : side_(side),
      h_(std::move(h)),
      a_(std::move(a)),
      b_(std::move(b)),
      nw_(std::move(nw)),
      ne_(std::move(ne)),
      bottom_(std::move(bottom)) {
    validate();
}

void KTPuzzle::validate() const {
    size_t n = static_cast<size_t>(side_);
    bool sizes_ok = nw_.size() == n && ne_.size() == n && bottom_.size() == n &&
                    h_.size() == (n ? n - 1 : 0) && a_.size() == n && b_.size() == n;
    if (!sizes_ok) throw StructureError("puzzle: malformed edge arrays");
    for (int v : nw_)
        if (!is_boundary_label(v)) throw StructureError("puzzle: glue label on NW boundary");
    for (int v : ne_)
        if (!is_boundary_label(v)) throw StructureError("puzzle: glue label on NE boundary");
    for (int v : bottom_)
        if (!is_boundary_label(v)) throw StructureError("puzzle: glue label on bottom boundary");
    for (int r = 1; r <= side_; ++r) {
        for (int c = 1; c <= r; ++c) {
            std::array<int, 3> t{up_nw(r, c), up_ne(r, c), up_s(r, c)};
            if (std::find(kUpCatalog.begin(), kUpCatalog.end(), t) == kUpCatalog.end())
                throw StructureError("puzzle: up-triangle outside the piece catalog");
        }
        for (int c = 1; c < r; ++c) {
            std::array<int, 3> t{down_n(r, c), down_sw(r, c), down_se(r, c)};
            if (std::find(kDownCatalog.begin(), kDownCatalog.end(), t) == kDownCatalog.end())
                throw StructureError("puzzle: down-triangle outside the piece catalog");
        }
    }
}

std::vector<KTPuzzle::EqPiece> KTPuzzle::equivariant_pieces() const {
    std::vector<EqPiece> out;
    for (int r = 1; r < side_; ++r)
        for (int c = 1; c <= r; ++c)
            if (up_s(r, c) == LGE) out.push_back({r, c, side_ - r});
    return out;
}

Int KTPuzzle::height_product() const {
    Int p = 1;
    for (const EqPiece& e : equivariant_pieces()) p *= e.height;
    return p;
}

std::vector<int> boundary_word(const Partition& p, int rows, int cols) {
    if (p.length() > rows || p.part(1) > cols)
        throw DomainError("boundary_word: partition does not fit the box");
    std::vector<int> w;
    for (int i = rows; i >= 1; --i) {
        for (int k = 0; k < p.part(i) - p.part(i + 1); ++k) w.push_back(1);
        w.push_back(0);
    }
    for (int k = 0; k < cols - p.part(1); ++k) w.push_back(1);
    return w;
}

namespace {

// Mutable edge store with agreement-checked writes.
class PuzzleBuilder {
public:
    PuzzleBuilder(int side, std::vector<int> nw, std::vector<int> ne,
                  std::vector<int> bottom)
        : side_(side), nw_(std::move(nw)), ne_(std::move(ne)), bottom_(std::move(bottom)) {
        h_.assign(static_cast<size_t>(std::max(side_ - 1, 0)), {});
        a_.assign(static_cast<size_t>(side_), {});
        b_.assign(static_cast<size_t>(side_), {});
        for (int r = 1; r < side_; ++r)
            h_[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(r), -1);
        for (int r = 1; r <= side_; ++r) {
            a_[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(std::max(r - 1, 0)), -1);
            b_[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(std::max(r - 1, 0)), -1);
        }
    }

    int get_h(int r, int c) const { return h_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int get_a(int r, int c) const { return a_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int get_b(int r, int c) const { return b_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

    void set_up(int r, int c, std::array<int, 3> t) {
        if (c == 1)
            expect(nw_[static_cast<size_t>(side_ - r)], t[0], "NW boundary");
        else
            write(a_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 2)], t[0]);
        if (c == r)
            expect(ne_[static_cast<size_t>(r - 1)], t[1], "NE boundary");
        else
            write(b_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)], t[1]);
        if (r == side_)
            expect(bottom_[static_cast<size_t>(c - 1)], t[2], "bottom boundary");
        else
            write(h_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)], t[2]);
    }

    void set_down(int r, int c, std::array<int, 3> t) {
        write(h_[static_cast<size_t>(r - 2)][static_cast<size_t>(c - 1)], t[0]);
        write(b_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)], t[1]);
        write(a_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)], t[2]);
    }

    KTPuzzle finish() {
        return KTPuzzle(side_, h_, a_, b_, nw_, ne_, bottom_);
    }

private:
    static void write(int& slot, int v) {
        if (slot != -1 && slot != v)
            throw InternalError("puzzle builder: conflicting edge assignment");
        slot = v;
    }
    static void expect(int have, int want, const char* where) {
        if (have != want)
            throw InternalError(std::string("puzzle builder: ") + where + " mismatch");
    }

    int side_;
    std::vector<std::vector<int>> h_, a_, b_;
    std::vector<int> nw_, ne_, bottom_;
};

}  // namespace

std::vector<KTPuzzle> enumerate_puzzles(const Partition& mu, const Partition& nu,
                                        const Partition& lambda, int box_rows,
                                        int box_cols, int budget_side) {
    int n = box_rows + box_cols;
    if (n > budget_side) throw ResourceError("enumerate_puzzles: side exceeds budget");
    std::vector<int> w_mu = boundary_word(mu, box_rows, box_cols);
    std::vector<int> w_nu = boundary_word(nu, box_rows, box_cols);
    std::vector<int> w_la = boundary_word(lambda, box_rows, box_cols);

    std::vector<std::vector<int>> h(static_cast<size_t>(std::max(n - 1, 0)));
    std::vector<std::vector<int>> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    for (int r = 1; r < n; ++r) h[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(r), -1);
    for (int r = 1; r <= n; ++r) {
        a[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(std::max(r - 1, 0)), -1);
        b[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(std::max(r - 1, 0)), -1);
    }
    std::vector<KTPuzzle> out;

    // triangles in reading order: T(r,1), V(r,1), T(r,2), ..., T(r,r)
    auto rec = [&](auto&& self, int r, int c, bool up) -> void {
        if (r > n) {
            out.emplace_back(n, h, a, b, w_mu, w_nu, w_la);
            return;
        }
        if (up) {
            int nw = (c == 1) ? w_mu[static_cast<size_t>(n - r)]
                              : a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 2)];
            for (const auto& t : kUpCatalog) {
                if (t[0] != nw) continue;
                if (c == r && t[1] != w_nu[static_cast<size_t>(r - 1)]) continue;
                if (r == n && t[2] != w_la[static_cast<size_t>(c - 1)]) continue;
                if (c < r) b[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = t[1];
                if (r < n) h[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = t[2];
                if (c == r)
                    self(self, r + 1, 1, true);
                else
                    self(self, r, c, false);
            }
            if (c < r) b[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = -1;
            if (r < n) h[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = -1;
        } else {
            int nn = h[static_cast<size_t>(r - 2)][static_cast<size_t>(c - 1)];
            int sw = b[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            for (const auto& t : kDownCatalog) {
                if (t[0] != nn || t[1] != sw) continue;
                a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = t[2];
                self(self, r, c + 1, true);
            }
            a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = -1;
        }
    };
    if (n == 0)
        out.emplace_back(0, h, a, b, w_mu, w_nu, w_la);
    else
        rec(rec, 1, 1, true);
    return out;
}

namespace {

// strip index of the rotated band for row i (from the top) of nabla
int band_strip(const SkewShape& s, int i) {
    return s.outer().part(1) - s.outer().part(i) + i - 1;
}

}  // namespace

KTPuzzle puzzle_from_tiling(const LozengeTiling& t) {
    const SkewShape& s = t.shape();
    const TriRegion& region = t.region();
    int d = s.num_rows();
    int lam1 = s.outer().part(1);
    int n = d + lam1;
    std::vector<int> w_la = boundary_word(s.outer(), d, lam1);
    std::vector<int> w_mu = boundary_word(s.inner(), d, lam1);
    PuzzleBuilder pb(n, w_la, w_mu, w_la);

    std::set<int> band_strips;
    for (int i = 1; i <= d; ++i) band_strips.insert(band_strip(s, i));

    for (int ell = 0; ell < n; ++ell) {
        if (!band_strips.count(ell)) {
            // filler strip at a one-position of w_lambda: all-1 triangles and
            // vertical rhombi, dictated by the NE-flank labels set by strip ell-1
            for (int k = 1; k <= n - ell; ++k) {
                int rr = ell + k, cc = k;
                int f = pb.get_b(rr, cc);
                if (f == L1) {
                    pb.set_up(rr, cc, {L1, L1, L1});
                    if (k <= n - ell - 1) pb.set_down(rr + 1, cc, {L1, L1, L1});
                } else if (f == L0) {
                    if (k > n - ell - 1)
                        throw InternalError("filler strip ends on a zero flank");
                    pb.set_up(rr, cc, {L1, L0, LGV});
                    pb.set_down(rr + 1, cc, {LGV, L0, L1});
                } else {
                    throw InternalError("filler strip: glue label on its flank");
                }
            }
            continue;
        }
        int i = 0;
        for (int ii = 1; ii <= d; ++ii)
            if (band_strip(s, ii) == ell) i = ii;
        int r = d + 1 - i;  // band index, 1 = bottom
        int len = 2 * (s.outer().part(i) + d - i) + 1;
        for (int m = 1; m <= len; ++m) {
            int x = -r + (m - 1);
            if (m % 2 == 1) {
                int rr = ell + (m + 1) / 2, cc = (m + 1) / 2;
                if (r == d && region.is_notch(x)) {
                    pb.set_up(rr, cc, {L0, L0, L0});
                    continue;
                }
                const Lozenge& l = t.lozenge_at_down(x, r);
                if (l.type == LozengeType::Vertical)
                    pb.set_up(rr, cc, {L0, L0, L0});
                else if (l.type == LozengeType::NWSE)
                    pb.set_up(rr, cc, {L0, L1, LGE});
                else
                    pb.set_up(rr, cc, {LGN, L1, L0});
            } else {
                int rr = ell + m / 2 + 1, cc = m / 2;
                const Lozenge& l = t.lozenge_at_up(x, r);
                if (l.type == LozengeType::Vertical)
                    pb.set_down(rr, cc, {L0, L0, L0});
                else if (l.type == LozengeType::NWSE)
                    pb.set_down(rr, cc, {LGE, L1, L0});
                else
                    pb.set_down(rr, cc, {L0, L1, LGN});
            }
        }
    }
    return pb.finish();
}

LozengeTiling tiling_from_puzzle(const KTPuzzle& p, const SkewShape& s) {
    int d = s.num_rows();
    int lam1 = s.outer().part(1);
    int n = d + lam1;
    if (p.side() != n) throw StructureError("puzzle: side does not match the shape");
    if (p.nw_word() != boundary_word(s.outer(), d, lam1) ||
        p.ne_word() != boundary_word(s.inner(), d, lam1) ||
        p.bottom_word() != boundary_word(s.outer(), d, lam1))
        throw StructureError("puzzle: boundary words do not match (lambda, mu, lambda)");
    p.validate();

    TriRegion region{s};
    std::set<int> band_strips;
    for (int i = 1; i <= d; ++i) band_strips.insert(band_strip(s, i));

    std::vector<Lozenge> lozenges;
    std::set<std::pair<int, int>> pending_lower;  // (x, band) of 0-labeled down-tris
    std::set<std::pair<int, int>> pending_upper;  // (x, band) of 0-labeled up-tris

    for (int ell = 0; ell < n; ++ell) {
        if (!band_strips.count(ell)) {
            for (int k = 1; k <= n - ell; ++k) {
                int rr = ell + k, cc = k;
                std::array<int, 3> up{p.up_nw(rr, cc), p.up_ne(rr, cc), p.up_s(rr, cc)};
                if (!(up == std::array<int, 3>{L1, L1, L1} ||
                      up == std::array<int, 3>{L1, L0, LGV}))
                    throw StructureError(
                        "strip at a one-position of w_lambda holds a weighted piece");
                if (k <= n - ell - 1) {
                    std::array<int, 3> dn{p.down_n(rr + 1, cc), p.down_sw(rr + 1, cc),
                                          p.down_se(rr + 1, cc)};
                    if (!(dn == std::array<int, 3>{L1, L1, L1} ||
                          dn == std::array<int, 3>{LGV, L0, L1}))
                        throw StructureError(
                            "strip at a one-position of w_lambda holds a weighted piece");
                }
            }
            continue;
        }
        int i = 0;
        for (int ii = 1; ii <= d; ++ii)
            if (band_strip(s, ii) == ell) i = ii;
        int r = d + 1 - i;
        int len = 2 * (s.outer().part(i) + d - i) + 1;
        int m = 1;
        while (m <= len) {
            int x = -r + (m - 1);
            if (m % 2 == 1) {
                int rr = ell + (m + 1) / 2, cc = (m + 1) / 2;
                std::array<int, 3> up{p.up_nw(rr, cc), p.up_ne(rr, cc), p.up_s(rr, cc)};
                if (up == std::array<int, 3>{L0, L0, L0}) {
                    if (r == d && region.is_notch(x)) {
                        // lower half of the implicit peak lozenge of nabla
                    } else {
                        pending_lower.insert({x, r});
                    }
                    m += 1;
                } else if (up == std::array<int, 3>{L0, L1, LGE}) {
                    lozenges.push_back({LozengeType::NWSE, r, x + 1});
                    m += 2;  // consumes the glued down-triangle as well
                } else {
                    throw StructureError("band strip holds a foreign up-triangle piece");
                }
            } else {
                int rr = ell + m / 2 + 1, cc = m / 2;
                std::array<int, 3> dn{p.down_n(rr, cc), p.down_sw(rr, cc),
                                      p.down_se(rr, cc)};
                if (dn == std::array<int, 3>{L0, L0, L0}) {
                    pending_upper.insert({x, r});
                    m += 1;
                } else if (dn == std::array<int, 3>{L0, L1, LGN}) {
                    lozenges.push_back({LozengeType::NESW, r, x});
                    m += 2;
                } else {
                    throw StructureError("band strip holds a foreign down-triangle piece");
                }
            }
        }
    }
    for (auto [x, r] : pending_lower) {
        if (!pending_upper.count({x, r + 1}))
            throw StructureError("unpaired vertical-lozenge halves");
        pending_upper.erase({x, r + 1});
        lozenges.push_back({LozengeType::Vertical, r, x});
    }
    if (!pending_upper.empty())
        throw StructureError("unpaired vertical-lozenge halves");
    return LozengeTiling(s, std::move(lozenges));
}

}  // namespace skewtab
