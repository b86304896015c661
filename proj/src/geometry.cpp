#include "skewtab/geometry.hpp"

#include <algorithm>

namespace skewtab {

TriRegion::TriRegion(SkewShape s) : shape(std::move(s)), d(shape.num_rows()) {}

int TriRegion::right_step_x(int band) const {
    return 2 * shape.outer().part(d + 1 - band) + band - 2;
}

bool TriRegion::has_up(int x, int band) const {
    if (band < 1 || band > d) return false;
    if ((x + band) % 2 == 0) return false;  // up-triangles sit at x = -band+1 (mod 2)
    return x >= -band + 1 && x <= right_step_x(band) - 1;
}

bool TriRegion::has_down(int x, int band) const {
    if (band < 1 || band > d) return false;
    if ((x + band) % 2 != 0) return false;
    if (x < -band || x > right_step_x(band)) return false;
    if (band == d && is_notch(x)) return false;
    return true;
}

bool TriRegion::is_notch(int x) const {
    for (int t = 1; t <= d; ++t)
        if (x == 2 * shape.inner().part(t) + d - 2 * t) return true;
    return false;
}

std::vector<int> TriRegion::notch_positions() const {
    std::vector<int> out;
    for (int t = d; t >= 1; --t) out.push_back(2 * shape.inner().part(t) + d - 2 * t);
    return out;
}

long TriRegion::up_count() const {
    long n = 0;
    for (int r = 1; r <= d; ++r) n += shape.outer().part(d + 1 - r) + r - 1;
    return n;
}

LozengeTiling::LozengeTiling(SkewShape shape, std::vector<Lozenge> lozenges)
    : shape_(std::move(shape)), region_(shape_), lozenges_(std::move(lozenges)) {
    std::sort(lozenges_.begin(), lozenges_.end());
    for (size_t i = 0; i < lozenges_.size(); ++i) {
        const Lozenge& l = lozenges_[i];
        switch (l.type) {
            case LozengeType::Vertical:
                down_index_[{l.x, l.band}] = i;
                up_index_[{l.x, l.band + 1}] = i;
                break;
            case LozengeType::NWSE:
                up_index_[{l.x, l.band}] = i;
                down_index_[{l.x - 1, l.band}] = i;
                break;
            case LozengeType::NESW:
                up_index_[{l.x, l.band}] = i;
                down_index_[{l.x + 1, l.band}] = i;
                break;
        }
    }
    validate();
}

void LozengeTiling::validate() const {
    long ups = 0, downs = 0;
    for (int r = 1; r <= region_.d; ++r) {
        for (int x = -r; x <= region_.right_step_x(r); ++x) {
            if (region_.has_up(x, r)) {
                ++ups;
                if (!up_index_.count({x, r}))
                    throw StructureError("tiling: up-triangle not covered");
            }
            if (region_.has_down(x, r)) {
                ++downs;
                if (!down_index_.count({x, r}))
                    throw StructureError("tiling: down-triangle not covered");
            }
        }
    }
    if (static_cast<long>(up_index_.size()) != ups ||
        static_cast<long>(down_index_.size()) != downs ||
        2 * static_cast<long>(lozenges_.size()) != ups + downs)
        throw StructureError("tiling: a lozenge leaves the region or overlaps");
    for (const Lozenge& l : lozenges_) {
        bool ok = true;
        switch (l.type) {
            case LozengeType::Vertical:
                ok = region_.has_down(l.x, l.band) && region_.has_up(l.x, l.band + 1);
                break;
            case LozengeType::NWSE:
                ok = region_.has_up(l.x, l.band) && region_.has_down(l.x - 1, l.band);
                break;
            case LozengeType::NESW:
                ok = region_.has_up(l.x, l.band) && region_.has_down(l.x + 1, l.band);
                break;
        }
        if (!ok) throw StructureError("tiling: lozenge outside the region");
    }
}

std::vector<Lozenge> LozengeTiling::weighted_rhombi() const {
    std::vector<Lozenge> out;
    for (const Lozenge& l : lozenges_)
        if (l.type == LozengeType::NWSE) out.push_back(l);
    return out;
}

Int LozengeTiling::rhombus_weight(const Lozenge& l) const {
    if (l.type != LozengeType::NWSE) throw DomainError("weight of a non-NWSE lozenge");
    int d = region_.d;
    return Int(shape_.outer().part(d + 1 - l.band) + (l.band - 1 - l.x) / 2);
}

Int LozengeTiling::weight_product() const {
    Int w = 1;
    for (const Lozenge& l : weighted_rhombi()) w *= rhombus_weight(l);
    return w;
}

const Lozenge& LozengeTiling::lozenge_at_up(int x, int band) const {
    auto it = up_index_.find({x, band});
    if (it == up_index_.end()) throw DomainError("no lozenge at that up-triangle");
    return lozenges_[it->second];
}

const Lozenge& LozengeTiling::lozenge_at_down(int x, int band) const {
    auto it = down_index_.find({x, band});
    if (it == down_index_.end()) throw DomainError("no lozenge at that down-triangle");
    return lozenges_[it->second];
}

bool operator==(const LozengeTiling& a, const LozengeTiling& b) {
    return a.shape_ == b.shape_ && a.lozenges_ == b.lozenges_;
}

LozengeTiling tiling_from_oot(const SkewShape& s, const Tableau& oot) {
    int d = s.num_rows();
    Partition lc = conjugate(s.outer());
    Tableau u = phi_oot_to_sf(s, oot);
    TriRegion region{s};
    std::vector<Lozenge> lozenges;
    std::set<std::pair<int, int>> covered_up, covered_down;

    for (int i = 1; i <= s.outer().part(1); ++i) {
        std::set<int> colT, colU;
        for (int v : oot.column(i)) colT.insert(v);
        for (int v : u.column(i)) colU.insert(v);
        int x = 2 * (i - 1) + (d - lc.part(i));
        for (int r = d - lc.part(i) + 1; r <= d; ++r) {
            bool nwse = colT.count(r) > 0;
            bool nesw = colU.count(d + 1 - r) > 0;
            if (nwse == nesw)
                throw InternalError("green path: band neither or doubly claimed");
            if (nwse) {
                lozenges.push_back({LozengeType::NWSE, r, x});
                covered_up.insert({x, r});
                covered_down.insert({x - 1, r});
                x -= 1;
            } else {
                lozenges.push_back({LozengeType::NESW, r, x});
                covered_up.insert({x, r});
                covered_down.insert({x + 1, r});
                x += 1;
            }
        }
    }
    // remaining triangles pair into vertical lozenges: D(x, r) with U(x, r+1)
    for (int r = 1; r <= d; ++r) {
        for (int x = -r; x <= region.right_step_x(r); ++x) {
            if (!region.has_down(x, r) || covered_down.count({x, r})) continue;
            if (r == d || !region.has_up(x, r + 1) || covered_up.count({x, r + 1}))
                throw InternalError("tiling: unmatched down-triangle");
            lozenges.push_back({LozengeType::Vertical, r, x});
            covered_down.insert({x, r});
            covered_up.insert({x, r + 1});
        }
    }
    return LozengeTiling(s, std::move(lozenges));
}

namespace {

// Walk the green path starting at the i-th bottom horizontal edge; report
// (band, x at entry, lozenge kind) per band crossed.
std::vector<PathStep> green_walk(const LozengeTiling& t, int i) {
    const SkewShape& s = t.shape();
    int d = s.num_rows();
    int h = d - conjugate(s.outer()).part(i);
    int x = 2 * (i - 1) + h;
    std::vector<PathStep> steps;
    for (int r = h + 1; r <= d; ++r) {
        const Lozenge& l = t.lozenge_at_up(x, r);
        if (l.type == LozengeType::Vertical)
            throw StructureError("green path runs into a vertical lozenge");
        PathStep st;
        st.band = r;
        st.depth = d + 1 - r;
        st.x_in = x;
        st.kind = l.type;
        steps.push_back(st);
        x += (l.type == LozengeType::NWSE) ? -1 : 1;
    }
    return steps;
}

}  // namespace

Tableau oot_from_tiling(const LozengeTiling& t) {
    const SkewShape& s = t.shape();
    Partition mc = conjugate(s.inner());
    std::vector<std::vector<int>> cols(static_cast<size_t>(s.outer().part(1)) + 1);
    for (int i = 1; i <= s.outer().part(1); ++i)
        for (const PathStep& st : green_walk(t, i))
            if (st.kind == LozengeType::NWSE)
                cols[static_cast<size_t>(i)].push_back(st.band);
    std::vector<std::vector<int>> rows(static_cast<size_t>(s.inner().length()));
    for (int i = 1; i <= s.outer().part(1); ++i) {
        auto& col = cols[static_cast<size_t>(i)];
        std::sort(col.begin(), col.end());
        if (static_cast<int>(col.size()) != mc.part(i))
            throw StructureError("tiling: NW-SE crossings do not fill column of mu");
        for (size_t r = 0; r < col.size(); ++r)
            rows[r].push_back(col[r]);
    }
    Tableau T(SkewShape(s.inner(), {}), std::move(rows));
    if (!T.is_semistandard()) throw StructureError("tiling: recovered T not semistandard");
    for (Cell c : T.shape().cells())
        if (oot_weight(s, c, T.at(c.row, c.col)) <= 0)
            throw StructureError("tiling: recovered T violates the OOT bound");
    return T;
}

Tableau sf_from_tiling(const LozengeTiling& t) {
    const SkewShape& s = t.shape();
    int d = s.num_rows();
    Partition mc = conjugate(s.inner());
    Partition lcj = conjugate(s.outer());
    std::vector<std::vector<int>> rows(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        rows[static_cast<size_t>(i - 1)].assign(
            static_cast<size_t>(s.outer().part(i) - s.inner().part(i)), 0);
    for (int i = 1; i <= s.outer().part(1); ++i) {
        std::vector<int> col;
        for (const PathStep& st : green_walk(t, i))
            if (st.kind == LozengeType::NESW) col.push_back(d + 1 - st.band);
        std::sort(col.begin(), col.end());
        if (static_cast<int>(col.size()) != lcj.part(i) - mc.part(i))
            throw StructureError("tiling: NE-SW crossings do not fill column of the shape");
        int row = mc.part(i);
        for (int v : col) {
            ++row;
            rows[static_cast<size_t>(row - 1)]
                [static_cast<size_t>(i - s.inner().part(row) - 1)] = v;
        }
    }
    Tableau u(s, std::move(rows));
    if (!u.is_semistandard()) throw StructureError("tiling: recovered U not semistandard");
    for (Cell c : s.cells())
        if (u.at(c.row, c.col) > c.row)
            throw StructureError("tiling: recovered U violates the flag bound");
    return u;
}

std::vector<LozengeTiling> enumerate_tilings(const SkewShape& s) {
    std::vector<LozengeTiling> out;
    for (const Tableau& T : enumerate_oot(s)) out.push_back(tiling_from_oot(s, T));
    return out;
}

ReverseExcitedDiagram tiling_to_re(const LozengeTiling& t) {
    return reverse_excited_from_sf(t.shape(), sf_from_tiling(t));
}

ExcitedDiagram tiling_to_ooe(const LozengeTiling& t) {
    Tableau T = oot_from_tiling(t);
    ExcitedDiagram D;
    D.tab = T;
    for (Cell u : T.shape().cells()) {
        int v = T.at(u.row, u.col);
        Cell c{v, u.col - u.row + v};
        D.cells.insert(c);
        D.origin[u] = c;
    }
    return D;
}

PathSystems path_systems(const LozengeTiling& t) {
    const SkewShape& s = t.shape();
    const TriRegion& region = t.region();
    int d = s.num_rows();
    PathSystems ps;
    for (int i = 1; i <= s.outer().part(1); ++i) ps.green.push_back(green_walk(t, i));

    // Red paths cross NW-SE edges, through vertical and NW-SE lozenges; each
    // starts on the left wall and ends on the left flank of a notch.  Edges
    // are recorded by their lower-right endpoint.
    for (int r = 1; r <= d; ++r) {
        std::vector<std::pair<int, int>> path;
        int p = 1 - r, y = r - 1;
        path.push_back({p, y});
        while (!(y == d - 1 && region.is_notch(p - 1))) {
            // next lozenge: the one containing the down-triangle NE of the edge
            const Lozenge& l = t.lozenge_at_down(p - 1, y + 1);
            if (l.type == LozengeType::NESW)
                throw StructureError("red path runs into a NE-SW lozenge");
            if (l.type == LozengeType::Vertical) {
                p += 1;
                y += 1;
            } else {
                p += 2;
            }
            path.push_back({p, y});
        }
        ps.red.push_back(std::move(path));
    }

    // Blue paths cross SW-NE edges, through vertical and NE-SW lozenges; each
    // starts on the right flank of a notch and ends on a staircase step.
    // Edges are recorded by their lower-left endpoint.
    for (int nx : region.notch_positions()) {
        std::vector<std::pair<int, int>> path;
        int p = nx + 1, y = d - 1;
        path.push_back({p, y});
        while (p != region.right_step_x(y + 1) + 1) {
            // next lozenge: the one containing the up-triangle SE of the edge
            const Lozenge& l = t.lozenge_at_up(p, y + 1);
            if (l.type == LozengeType::NWSE)
                throw StructureError("blue path runs into a NW-SE lozenge");
            if (l.type == LozengeType::Vertical) {
                p += 1;
                y -= 1;
            } else {
                p += 2;
            }
            path.push_back({p, y});
        }
        ps.blue.push_back(std::move(path));
    }
    return ps;
}

}  // namespace skewtab
