#include "skewtab/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace skewtab {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.num_rows())
        throw DomainError("tableau: row count does not match shape");
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        size_t want = static_cast<size_t>(shape_.outer().part(i) - shape_.inner().part(i));
        if (rows_[static_cast<size_t>(i - 1)].size() != want)
            throw DomainError("tableau: row length does not match shape");
    }
}

int Tableau::at(int i, int j) const {
    if (!has_cell(i, j)) throw DomainError("tableau: cell outside shape");
    return rows_[static_cast<size_t>(i - 1)]
                [static_cast<size_t>(j - shape_.inner().part(i) - 1)];
}

std::vector<int> Tableau::column(int j) const {
    std::vector<int> out;
    for (int i = 1; i <= shape_.num_rows(); ++i)
        if (has_cell(i, j)) out.push_back(at(i, j));
    return out;
}

bool Tableau::is_semistandard() const {
    for (Cell u : shape_.cells()) {
        if (at(u.row, u.col) < 1) return false;
        if (has_cell(u.row, u.col - 1) && at(u.row, u.col - 1) > at(u.row, u.col))
            return false;
        if (has_cell(u.row - 1, u.col) && at(u.row - 1, u.col) >= at(u.row, u.col))
            return false;
    }
    return true;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= shape_.num_rows(); ++i) {
        if (i > 1) os << "/";
        for (int j = shape_.inner().part(i) + 1; j <= shape_.outer().part(i); ++j) {
            if (j > shape_.inner().part(i) + 1) os << ",";
            os << at(i, j);
        }
    }
    return os.str();
}

void for_each_ssyt(const SkewShape& shape,
                   const std::function<std::pair<int, int>(Cell)>& bounds,
                   const std::function<void(const Tableau&)>& visit) {
    std::vector<Cell> cells = shape.cells();
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.num_rows()));
    for (int i = 1; i <= shape.num_rows(); ++i)
        rows[static_cast<size_t>(i - 1)].assign(
            static_cast<size_t>(shape.outer().part(i) - shape.inner().part(i)), 0);
    auto value_at = [&](int i, int j) {
        return rows[static_cast<size_t>(i - 1)]
                   [static_cast<size_t>(j - shape.inner().part(i) - 1)];
    };
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            visit(Tableau(shape, rows));
            return;
        }
        Cell u = cells[idx];
        auto [lo, hi] = bounds(u);
        if (shape.cell_in({u.row, u.col - 1}))
            lo = std::max(lo, value_at(u.row, u.col - 1));
        if (shape.cell_in({u.row - 1, u.col}))
            lo = std::max(lo, value_at(u.row - 1, u.col) + 1);
        for (int v = lo; v <= hi; ++v) {
            rows[static_cast<size_t>(u.row - 1)]
                [static_cast<size_t>(u.col - shape.inner().part(u.row) - 1)] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const FlagVector& flags) {
    if (static_cast<int>(flags.lower.size()) != shape.num_rows() ||
        static_cast<int>(flags.upper.size()) != shape.num_rows())
        throw DomainError("enumerate_ssyt: flag length does not match row count");
    for (size_t i = 1; i < flags.lower.size(); ++i) {
        if (flags.lower[i] < flags.lower[i - 1] || flags.upper[i] < flags.upper[i - 1])
            throw DomainError("enumerate_ssyt: flags must be weakly increasing");
    }
    std::vector<Tableau> out;
    for_each_ssyt(
        shape,
        [&](Cell u) {
            return std::pair<int, int>(flags.lower[static_cast<size_t>(u.row - 1)],
                                       flags.upper[static_cast<size_t>(u.row - 1)]);
        },
        [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int bound) {
    FlagVector f;
    f.lower.assign(static_cast<size_t>(shape.num_rows()), 1);
    f.upper.assign(static_cast<size_t>(shape.num_rows()), bound);
    return enumerate_ssyt(shape, f);
}

Int oot_weight(const SkewShape& s, Cell u, int k) {
    return Int(s.outer().part(s.num_rows() + 1 - k) - content(u));
}

std::vector<Tableau> enumerate_oot(const SkewShape& s) {
    int d = s.num_rows();
    SkewShape mu(s.inner(), {});
    std::vector<Tableau> out;
    // lambda_{d+1-k} is weakly increasing in k, so the admissible values at a
    // cell form the upper interval [k_min(u), d].
    for_each_ssyt(
        mu,
        [&](Cell u) {
            int k = 1;
            while (k <= d && s.outer().part(d + 1 - k) <= content(u)) ++k;
            return std::pair<int, int>(k, d);
        },
        [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_sf(const SkewShape& s) {
    FlagVector f;
    for (int i = 1; i <= s.num_rows(); ++i) {
        f.lower.push_back(1);
        f.upper.push_back(i);
    }
    return enumerate_ssyt(s, f);
}

Tableau phi_oot_to_sf(const SkewShape& s, const Tableau& oot) {
    int d = s.num_rows();
    Partition lc = conjugate(s.outer());
    Partition mc = conjugate(s.inner());
    std::vector<std::vector<int>> rows(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        rows[static_cast<size_t>(i - 1)].assign(
            static_cast<size_t>(s.outer().part(i) - s.inner().part(i)), 0);
    for (int j = 1; j <= s.outer().part(1); ++j) {
        std::set<int> taken;
        for (int v : oot.column(j)) taken.insert(d + 1 - v);
        int row = mc.part(j);  // fill rows mu'_j+1 .. lambda'_j
        for (int k = 1; k <= lc.part(j); ++k) {
            if (taken.count(k)) continue;
            ++row;
            if (row > lc.part(j))
                throw InternalError("phi: column rule overflows the column");
            rows[static_cast<size_t>(row - 1)]
                [static_cast<size_t>(j - s.inner().part(row) - 1)] = k;
        }
        if (row != lc.part(j))
            throw InternalError("phi: column rule produced wrong column length");
    }
    Tableau t(s, std::move(rows));
    if (!t.is_semistandard()) throw InternalError("phi: image is not semistandard");
    return t;
}

namespace {

std::mutex syt_mutex;

Int count_syt_rec(std::vector<int> lam, const Partition& mu,
                  std::map<std::vector<int>, Int>& memo) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    bool done = true;
    for (size_t i = 0; i < lam.size(); ++i)
        if (lam[i] != mu.part(static_cast<int>(i) + 1)) done = false;
    if (done) return 1;
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    Int total = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i + 1 < lam.size() && lam[i + 1] == lam[i]) continue;  // not a corner
        if (lam[i] - 1 < mu.part(static_cast<int>(i) + 1)) continue;
        std::vector<int> next = lam;
        next[i] -= 1;
        total += count_syt_rec(std::move(next), mu, memo);
    }
    memo[lam] = total;
    return total;
}

}  // namespace

Int count_syt(const SkewShape& s, long budget_cells) {
    if (s.size() > budget_cells)
        throw ResourceError("count_syt: shape exceeds cell budget");
    std::lock_guard<std::mutex> lock(syt_mutex);
    static std::map<std::vector<int>, std::map<std::vector<int>, Int>> memos;
    auto& memo = memos[s.inner().parts()];
    return count_syt_rec(s.outer().parts(), s.inner(), memo);
}

std::vector<Tableau> enumerate_syt(const SkewShape& s, long budget_cells) {
    if (s.size() > budget_cells)
        throw ResourceError("enumerate_syt: shape exceeds cell budget");
    std::vector<Cell> cells = s.cells();
    long n = s.size();
    std::map<Cell, int> fill;
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            std::vector<std::vector<int>> rows(static_cast<size_t>(s.num_rows()));
            for (int i = 1; i <= s.num_rows(); ++i)
                for (int j = s.inner().part(i) + 1; j <= s.outer().part(i); ++j)
                    rows[static_cast<size_t>(i - 1)].push_back(fill.at({i, j}));
            out.emplace_back(s, std::move(rows));
            return;
        }
        for (Cell u : cells) {
            if (fill.count(u)) continue;
            if (s.cell_in({u.row, u.col - 1}) && !fill.count({u.row, u.col - 1})) continue;
            if (s.cell_in({u.row - 1, u.col}) && !fill.count({u.row - 1, u.col})) continue;
            fill[u] = v;
            self(self, v + 1);
            fill.erase(u);
        }
    };
    rec(rec, 1);
    return out;
}

TableauStats tableau_statistics(const SkewShape& s, const Tableau& T) {
    if (!T.is_semistandard()) throw DomainError("statistics: tableau not semistandard");
    if (T.shape().outer() != s.inner() || !T.shape().inner().empty())
        throw DomainError("statistics: tableau shape must be the inner partition");
    int d = s.num_rows();
    TableauStats st;
    for (Cell u : T.shape().cells()) {
        int v = T.at(u.row, u.col);
        if (v > d) throw DomainError("statistics: entry exceeds d");
        int lo = 1;
        if (T.has_cell(u.row, u.col - 1)) lo = std::max(lo, T.at(u.row, u.col - 1));
        if (T.has_cell(u.row - 1, u.col)) lo = std::max(lo, T.at(u.row - 1, u.col) + 1);
        std::optional<int> hi;  // nullopt = unbounded
        if (T.has_cell(u.row, u.col + 1)) hi = T.at(u.row, u.col + 1);
        if (T.has_cell(u.row + 1, u.col)) {
            int below = T.at(u.row + 1, u.col) - 1;
            hi = hi ? std::min(*hi, below) : below;
        }
        st.m[u] = lo;
        st.M[u] = hi;
        st.weights[u] = oot_weight(s, u, v);
        for (int k = lo; k < v; ++k) st.p += oot_weight(s, u, k);
        int cap = hi ? std::min(d, *hi) : d;
        for (int k = v + 1; k <= cap; ++k) st.p_star += oot_weight(s, u, k);
    }
    return st;
}

long SetValuedTableau::surplus() const {
    long total = 0;
    for (const auto& [u, vals] : entries) total += static_cast<long>(vals.size());
    return total - shape.size();
}

bool SetValuedTableau::valid() const {
    for (const auto& [u, vals] : entries) {
        if (vals.empty()) return false;
        auto right = entries.find({u.row, u.col + 1});
        if (right != entries.end() && *vals.rbegin() > *right->second.begin())
            return false;
        auto below = entries.find({u.row + 1, u.col});
        if (below != entries.end() && *vals.rbegin() >= *below->second.begin())
            return false;
    }
    return true;
}

SvtDecomposition enumerate_svt(const Partition& mu, int d, long max_extra) {
    SvtDecomposition dec;
    SkewShape straight(mu, {});
    dec.base = enumerate_ssyt(straight, d);
    std::vector<Cell> cells = straight.cells();
    for (const Tableau& T0 : dec.base) {
        // options per cell: {m_T0(u), ..., T0(u)-1}
        std::vector<std::vector<int>> options(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) {
            Cell u = cells[i];
            int lo = 1;
            if (T0.has_cell(u.row, u.col - 1)) lo = std::max(lo, T0.at(u.row, u.col - 1));
            if (T0.has_cell(u.row - 1, u.col)) lo = std::max(lo, T0.at(u.row - 1, u.col) + 1);
            for (int k = lo; k < T0.at(u.row, u.col); ++k) options[i].push_back(k);
        }
        std::vector<SetValuedTableau> members;
        std::vector<std::set<int>> chosen(cells.size());
        auto rec = [&](auto&& self, size_t idx, long extra) -> void {
            if (idx == cells.size()) {
                SetValuedTableau svt;
                svt.shape = mu;
                for (size_t i = 0; i < cells.size(); ++i) {
                    std::set<int> vals = chosen[i];
                    vals.insert(T0.at(cells[i].row, cells[i].col));
                    svt.entries[cells[i]] = std::move(vals);
                }
                members.push_back(std::move(svt));
                return;
            }
            size_t nopt = options[idx].size();
            for (unsigned long mask = 0; mask < (1UL << nopt); ++mask) {
                long add = static_cast<long>(__builtin_popcountl(mask));
                if (extra + add > max_extra) continue;
                chosen[idx].clear();
                for (size_t b = 0; b < nopt; ++b)
                    if (mask & (1UL << b)) chosen[idx].insert(options[idx][b]);
                self(self, idx + 1, extra + add);
            }
            chosen[idx].clear();
        };
        rec(rec, 0, 0);
        dec.group.push_back(std::move(members));
    }
    return dec;
}

namespace {

// Subpartition lattice of lambda restricted to supersets of mu.
struct SubLattice {
    std::vector<Partition> nodes;
    std::vector<std::vector<size_t>> subsets_of;  // b with nodes[b] <= nodes[a]
    std::vector<std::vector<size_t>> hstrips_to;  // subset and nodes[a]/nodes[b] h-strip
    std::vector<long> sizes;
    size_t top = 0;
};

bool horizontal_strip(const Partition& big, const Partition& small) {
    for (int i = 1; i <= big.length(); ++i) {
        if (small.part(i) > big.part(i)) return false;
        if (small.part(i) < big.part(i + 1)) return false;
    }
    return true;
}

SubLattice build_lattice(const SkewShape& s) {
    SubLattice L;
    for (const Partition& nu : subpartitions(s.outer()))
        if (nu.contains(s.inner())) L.nodes.push_back(nu);
    std::sort(L.nodes.begin(), L.nodes.end());
    L.subsets_of.resize(L.nodes.size());
    L.hstrips_to.resize(L.nodes.size());
    for (size_t a = 0; a < L.nodes.size(); ++a) {
        L.sizes.push_back(L.nodes[a].size());
        if (L.nodes[a] == s.outer()) L.top = a;
        for (size_t b = 0; b < L.nodes.size(); ++b) {
            if (!L.nodes[a].contains(L.nodes[b])) continue;
            L.subsets_of[a].push_back(b);
            if (horizontal_strip(L.nodes[a], L.nodes[b])) L.hstrips_to[a].push_back(b);
        }
    }
    return L;
}

// coefficient tables indexed [state][degree 0..max]
using Table = std::vector<std::vector<Int>>;

Table make_table(size_t states, long max_deg) {
    return Table(states, std::vector<Int>(static_cast<size_t>(max_deg) + 1, 0));
}

}  // namespace

QSeries rpp_series(const SkewShape& s, long max_deg) {
    if (max_deg < 0) throw DomainError("rpp_series: negative degree");
    if (s.is_empty()) return QSeries::one(max_deg);
    SubLattice L = build_lattice(s);
    long lam_size = s.outer().size();
    /* f_k(nu) enumerates chains mu <= rho_0 <= ... <= rho_k = nu weighted by
     * q^{sum_j (|lambda| - |rho_{j-1}|)}.  An RPP with entries <= k is such a
     * chain through its level sets {T <= j} = [rho_j/mu], and entries <=
     * max_deg suffice at this truncation since the weight of the chain grows
     * by |lambda| - |rho| >= 1 for every step spent below lambda. */
    Table cur = make_table(L.nodes.size(), max_deg);
    for (auto& row : cur) row[0] = 1;
    for (long step = 1; step <= max_deg; ++step) {
        Table next = make_table(L.nodes.size(), max_deg);
        for (size_t a = 0; a < L.nodes.size(); ++a) {
            for (size_t b : L.subsets_of[a]) {
                long w = lam_size - L.sizes[b];
                if (w > max_deg) continue;
                const auto& src = cur[b];
                auto& dst = next[a];
                for (long e = 0; e + w <= max_deg; ++e)
                    if (src[static_cast<size_t>(e)] != 0)
                        dst[static_cast<size_t>(e + w)] += src[static_cast<size_t>(e)];
            }
        }
        cur = std::move(next);
    }
    return QSeries(0, max_deg, cur[L.top]);
}

QSeries ssyt_principal_series(const SkewShape& s, long max_deg) {
    if (s.is_empty()) return QSeries::one(max_deg);
    SubLattice L = build_lattice(s);
    size_t bottom = L.nodes.size();
    for (size_t a = 0; a < L.nodes.size(); ++a)
        if (L.nodes[a] == s.inner()) bottom = a;
    if (bottom == L.nodes.size()) throw InternalError("lattice misses the inner shape");
    // entry k on a cell weighs q^{k-1}; entries <= max_deg + 1 suffice
    Table cur = make_table(L.nodes.size(), max_deg);
    cur[bottom][0] = 1;
    for (long k = 1; k <= max_deg + 1; ++k) {
        Table next = make_table(L.nodes.size(), max_deg);
        for (size_t a = 0; a < L.nodes.size(); ++a) {
            for (size_t b : L.hstrips_to[a]) {
                long w = (k - 1) * (L.sizes[a] - L.sizes[b]);
                if (w > max_deg) continue;
                const auto& src = cur[b];
                auto& dst = next[a];
                for (long e = 0; e + w <= max_deg; ++e)
                    if (src[static_cast<size_t>(e)] != 0)
                        dst[static_cast<size_t>(e + w)] += src[static_cast<size_t>(e)];
            }
        }
        cur = std::move(next);
    }
    return QSeries(0, max_deg, cur[L.top]);
}

QSeries ssyt_principal_closed(const Partition& lambda, long max_deg) {
    QSeries out = QSeries::from(QLaurent::monomial(1, b_statistic(lambda)), max_deg);
    Partition lc = conjugate(lambda);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            long h = lambda.part(i) + lc.part(j) - i - j + 1;
            out = out * QSeries::from(QLaurent::bracket(h), max_deg + b_statistic(lambda)).inverse();
        }
    return out;
}

}  // namespace skewtab
