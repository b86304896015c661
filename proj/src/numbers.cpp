#include "skewtab/numbers.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <vector>

namespace skewtab {

namespace {
std::mutex cache_mutex;
}

Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    static std::vector<Int> table = {1};
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * static_cast<long>(table.size()));
    return table[static_cast<size_t>(n)];
}

Int double_factorial(long n) {
    if (n < -1) throw DomainError("double factorial of integer below -1");
    Int r = 1;
    for (long v = n; v >= 2; v -= 2) r *= v;
    return r;
}

Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

long max_cells_budget() {
    if (const char* env = std::getenv("SKEWTAB_MAX_CELLS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 24;
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

Int det_integer(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev,
                                    "Bareiss step");
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int euler_number(int n) {
    if (n < 0) throw DomainError("euler_number: negative index");
    static std::vector<Int> table;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (static_cast<int>(table.size()) > n) return table[static_cast<size_t>(n)];
    std::vector<Int> row = {1};
    if (table.empty()) table.push_back(1);
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(static_cast<size_t>(m) + 1);
        next[0] = 0;
        for (int k = 1; k <= m; ++k) next[k] = next[k - 1] + row[static_cast<size_t>(m - k)];
        row = std::move(next);
        if (static_cast<int>(table.size()) == m) table.push_back(row.back());
    }
    return table[static_cast<size_t>(n)];
}

Int genocchi(int n) {
    if (n < 1) throw DomainError("genocchi: index must be >= 1");
    Int num = 2 * Int(n) * euler_number(2 * n - 1);
    return div_exact(num, pow2(static_cast<unsigned long>(2 * n - 1)),
                     "Genocchi/Euler proportionality");
}

namespace {

// DP over (position, value of previous entry).
Int pistol_dp(int len, bool strict, int first_pos) {
    if (len < first_pos) return 1;
    auto bound = [](int k) { return (k + 1) / 2; };
    std::vector<Int> cur(static_cast<size_t>(bound(first_pos)) + 1, 0);
    for (int v = 1; v <= bound(first_pos); ++v) cur[static_cast<size_t>(v)] = 1;
    for (int k = first_pos + 1; k <= len; ++k) {
        std::vector<Int> next(static_cast<size_t>(bound(k)) + 1, 0);
        for (int pv = 1; pv < static_cast<int>(cur.size()); ++pv) {
            if (cur[static_cast<size_t>(pv)] == 0) continue;
            for (int v = 1; v <= bound(k); ++v) {
                if (strict) {
                    // constraint between positions k-1 and k
                    if ((k - 1) % 2 == 1 && !(pv >= v)) continue;
                    if ((k - 1) % 2 == 0 && !(pv < v)) continue;
                }
                next[static_cast<size_t>(v)] += cur[static_cast<size_t>(pv)];
            }
        }
        cur = std::move(next);
    }
    Int total = 0;
    for (const Int& c : cur) total += c;
    return total;
}

}  // namespace

Int pistol_count(int len, bool strict_alternating) {
    if (len < 1) throw DomainError("pistol_count: length must be >= 1");
    return pistol_dp(len, strict_alternating, 1);
}

Int truncated_pistol_count(int n, int k) {
    if (!(n > k && k >= 0)) throw DomainError("truncated pistols: need n > k >= 0");
    return pistol_dp(2 * n - 1, true, 2 * k + 1);
}

Int median_genocchi(int n) {
    if (n < 1) throw DomainError("median_genocchi: index must be >= 1");
    return pistol_count(2 * n, true);
}

Superfactorials superfactorials(int n) {
    if (n < 0) throw DomainError("superfactorials: negative index");
    Superfactorials s{1, 1, 1};
    for (int i = 1; i <= n; ++i) {
        s.phi *= factorial(i);
        s.psi *= factorial(2 * i - 1);
        s.lambda *= double_factorial(2 * i - 1);
    }
    return s;
}

Rat bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    static std::vector<Rat> table;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        if (m == 0) {
            table.emplace_back(1);
            continue;
        }
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat sum = 0;
        for (int k = 0; k < m; ++k) sum += Rat(binom(m + 1, k)) * table[static_cast<size_t>(k)];
        table.push_back(-sum / Rat(binom(m + 1, m)));
    }
    return table[static_cast<size_t>(n)];
}

}  // namespace skewtab
