#include "skewtab/shapes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace skewtab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(size()));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.part(1), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) cols[j]++;
    return Partition(std::move(cols));
}

Int hook(const Partition& p, Cell u) {
    if (!p.contains(u)) throw DomainError("hook: cell outside diagram");
    Partition pc = conjugate(p);
    return Int(p.part(u.row) + pc.part(u.col) - u.row - u.col + 1);
}

Int hook_product(const Partition& p) {
    Partition pc = conjugate(p);
    Int prod = 1;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            prod *= p.part(i) + pc.part(j) - i - j + 1;
    return prod;
}

Int hook_length_count(const Partition& p) {
    return div_exact(factorial(p.size()), hook_product(p), "hook length formula");
}

Int hook_content_count(const Partition& p, long bound) {
    Partition pc = conjugate(p);
    Rat prod = 1;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) {
            long num = bound + j - i;
            if (num <= 0) return 0;
            prod *= ratio(Int(num), Int(p.part(i) + pc.part(j) - i - j + 1));
        }
    return to_int_exact(prod, "hook content formula");
}

long b_statistic(const Partition& p) {
    Partition pc = conjugate(p);
    long b = 0;
    for (int i = 1; i <= pc.length(); ++i) b += 1L * pc.part(i) * (pc.part(i) - 1) / 2;
    return b;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw DomainError("skew shape: inner partition has more parts than outer");
    if (!outer_.contains(inner_))
        throw DomainError("skew shape: inner partition not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= num_rows(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    return out;
}

SkewShape SkewShape::conjugate() const {
    return SkewShape(skewtab::conjugate(outer_), skewtab::conjugate(inner_));
}

std::vector<Cell> SkewShape::shifted_cells() const {
    std::vector<Cell> out;
    int d = num_rows();
    for (int i = 1; i <= d; ++i)
        for (int j = inner_.part(i) + d; j <= outer_.part(i) + d - 1; ++j)
            out.push_back({i, j});
    return out;
}

bool SkewShape::shifted_outer_contains(Cell u) const {
    return u.row >= 1 && u.row <= num_rows() && u.col >= u.row &&
           u.col <= outer_.part(u.row) + num_rows() - 1;
}

std::string SkewShape::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition{};
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw DomainError("cannot parse partition part '" + tok + "'");
        }
        if (pos != tok.size()) throw DomainError("cannot parse partition part '" + tok + "'");
        if (v < 0) throw DomainError("negative partition part");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

SkewShape parse_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text), {});
    return SkewShape(parse_partition(text.substr(0, slash)),
                     parse_partition(text.substr(slash + 1)));
}

Partition staircase(int n) {
    if (n < 0) throw DomainError("staircase: negative index");
    std::vector<int> parts;
    for (int i = n - 1; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

SkewShape zigzag(int n) {
    if (n < 1) throw DomainError("zigzag: n must be positive");
    return SkewShape(staircase(n + 1), staircase(n - 1));
}

SkewShape shifted_zigzag(int n, int k) {
    if (!(n > k && k >= 0)) throw DomainError("shifted zigzag: need n > k >= 0");
    // sigma_{n-k} occupies rows k+1..n of delta_{n+1}, flush against its
    // right boundary; rows 1..k of the inner shape are full.
    std::vector<int> inner;
    for (int r = 1; r <= k; ++r) inner.push_back(n + 1 - r);
    for (int r = k + 1; r <= n; ++r) inner.push_back(std::max(n - r - 1, 0));
    return SkewShape(staircase(n + 1), Partition(std::move(inner)));
}

SkewShape thick_zigzag(int n, int k) {
    if (k < 1 || n < 0) throw DomainError("thick zigzag: need k >= 1, n >= 0");
    return SkewShape(staircase(n + 2 * k), staircase(n));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxPart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        int hi = std::min(lambda.part(row), row == 1 ? lambda.part(1) : cur[row - 2]);
        for (int v = hi; v >= 0; --v) {
            if (v == 0) {
                out.emplace_back(cur);
                return;  // all following rows are zero too
            }
            cur.push_back(v);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    if (lambda.empty())
        out.emplace_back();
    else
        rec(rec, 1);
    return out;
}

std::vector<SkewShape> all_skew_shapes(int max_outer_size) {
    std::vector<SkewShape> out;
    for (int n = 0; n <= max_outer_size; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : subpartitions(lam)) out.emplace_back(lam, mu);
    return out;
}

Strip make_strip(std::vector<Cell> cells) {
    Strip s;
    if (cells.empty()) return s;
    std::sort(cells.begin(), cells.end(),
              [](Cell a, Cell b) { return content(a) < content(b); });
    s.min_content = content(cells.front());
    s.max_content = content(cells.back());
    for (size_t i = 0; i < cells.size(); ++i) {
        if (content(cells[i]) != s.min_content + static_cast<int>(i))
            throw DomainError("strip: contents must cover an interval exactly once");
        if (i > 0) {
            Cell a = cells[i - 1], b = cells[i];
            bool adjacent = (b.row == a.row && b.col == a.col + 1) ||
                            (b.row == a.row - 1 && b.col == a.col);
            if (!adjacent) throw DomainError("strip: cells must form a connected ribbon");
        }
    }
    s.cells = std::move(cells);
    return s;
}

Substrip substrip(const Strip& theta, int a, int b) {
    Substrip out;
    if (b == a - 1) {
        out.kind = SubstripKind::Empty;
        return out;
    }
    if (b < a - 1 || a < theta.min_content || b > theta.max_content) {
        out.kind = SubstripKind::Undefined;
        return out;
    }
    std::vector<Cell> cells;
    for (Cell u : theta.cells)
        if (content(u) >= a && content(u) <= b) cells.push_back(u);
    out.kind = SubstripKind::Proper;
    out.strip = make_strip(std::move(cells));
    return out;
}

Strip border_strip(const Partition& lambda) {
    std::vector<Cell> cells;
    for (Cell u : lambda.cells())
        if (!lambda.contains({u.row + 1, u.col + 1})) cells.push_back(u);
    return make_strip(std::move(cells));
}

OutsideDecomposition lascoux_pragacz(const SkewShape& s) {
    if (s.is_empty()) throw DomainError("lascoux_pragacz: empty shape");
    OutsideDecomposition dec;
    dec.cutting_strip = border_strip(s.outer());

    // Translate the cutting strip by t steps NW and intersect with the shape;
    // record connected components.
    std::map<Cell, bool> used;
    for (Cell u : s.cells()) used[u] = false;
    for (int t = 0; t <= s.outer().length(); ++t) {
        std::vector<Cell> hit;
        for (Cell u : dec.cutting_strip.cells) {
            Cell v{u.row - t, u.col - t};
            if (s.cell_in(v)) hit.push_back(v);
        }
        std::sort(hit.begin(), hit.end(),
                  [](Cell a, Cell b) { return content(a) < content(b); });
        std::vector<Cell> comp;
        auto flush = [&] {
            if (!comp.empty()) {
                for (Cell u : comp) used[u] = true;
                dec.strips.push_back(make_strip(comp));
                comp.clear();
            }
        };
        for (Cell u : hit) {
            if (!comp.empty()) {
                Cell prev = comp.back();
                bool adjacent = (u.row == prev.row && u.col == prev.col + 1) ||
                                (u.row == prev.row - 1 && u.col == prev.col);
                if (!adjacent) flush();
            }
            comp.push_back(u);
        }
        flush();
    }
    long covered = 0;
    for (auto& [u, f] : used) {
        if (!f) throw InternalError("lascoux_pragacz: cell not covered by any strip");
        ++covered;
    }
    long total = 0;
    for (const Strip& st : dec.strips) total += static_cast<long>(st.cells.size());
    if (total != covered)
        throw InternalError("lascoux_pragacz: strips do not partition the shape");
    return dec;
}

Partition complement_partition(const Partition& lambda, const Strip& piece) {
    std::vector<std::vector<bool>> in(lambda.length() + 1);
    for (int i = 1; i <= lambda.length(); ++i)
        in[i].assign(lambda.part(i) + 1, false);
    for (Cell u : piece.cells) {
        if (!lambda.contains(u)) throw InternalError("complement: strip cell outside lambda");
        in[u.row][u.col] = true;
    }
    std::vector<int> nu;
    for (int i = 1; i <= lambda.length(); ++i) {
        int len = 0;
        while (len < lambda.part(i) && !in[i][len + 1]) ++len;
        // the rest of the row must belong to the strip
        for (int j = len + 1; j <= lambda.part(i); ++j)
            if (!in[i][j])
                throw InternalError("complement: [lambda] minus strip is not a Young diagram");
        nu.push_back(len);
    }
    for (size_t i = 1; i < nu.size(); ++i)
        if (nu[i] > nu[i - 1])
            throw InternalError("complement: [lambda] minus strip is not a Young diagram");
    return Partition(std::move(nu));
}

}  // namespace skewtab
