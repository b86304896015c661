#include "skewtab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace skewtab {

QLaurent::QLaurent(long min_deg, std::vector<Int> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
    normalize();
}

void QLaurent::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(lead),
                                   coeffs_.begin() + static_cast<long>(tail));
        min_deg_ += static_cast<long>(lead);
    }
}

QLaurent QLaurent::monomial(Int c, long e) {
    if (c == 0) return {};
    QLaurent p;
    p.min_deg_ = e;
    p.coeffs_ = {std::move(c)};
    return p;
}

QLaurent QLaurent::bracket(long a) {
    if (a == 0) return {};
    return one() - monomial(1, a);
}

Int QLaurent::coeff(long e) const {
    if (is_zero() || e < min_deg_ || e > max_degree()) return 0;
    return coeffs_[static_cast<size_t>(e - min_deg_)];
}

QLaurent QLaurent::operator-() const {
    QLaurent p = *this;
    for (Int& c : p.coeffs_) c = -c;
    return p;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(min_deg_, o.min_deg_);
    long hi = std::max(max_degree(), o.max_degree());
    std::vector<Int> out(static_cast<size_t>(hi - lo + 1), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<size_t>(min_deg_ - lo) + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
    min_deg_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QLaurent(a.min_deg_ + b.min_deg_, std::move(out));
}

QLaurent QLaurent::shifted(long e) const {
    QLaurent p = *this;
    if (!p.is_zero()) p.min_deg_ += e;
    return p;
}

QLaurent QLaurent::div_exact(const QLaurent& divisor) const {
    if (divisor.is_zero()) throw InternalError("QLaurent: division by zero");
    if (is_zero()) return {};
    // Long division from the top degree; exactness is asserted step by step.
    std::vector<Int> rem = coeffs_;
    long rem_min = min_deg_;
    const std::vector<Int>& d = divisor.coeffs_;
    if (rem.size() < d.size()) throw InternalError("QLaurent: inexact division");
    std::vector<Int> quot(rem.size() - d.size() + 1, 0);
    const Int& dl = d.back();
    for (size_t qi = quot.size(); qi-- > 0;) {
        Int& top = rem[qi + d.size() - 1];
        if (top == 0) continue;
        Int c = skewtab::div_exact(top, dl, "QLaurent division");
        quot[qi] = c;
        for (size_t k = 0; k < d.size(); ++k) rem[qi + k] -= c * d[k];
    }
    for (const Int& c : rem)
        if (c != 0) throw InternalError("QLaurent: inexact division");
    return QLaurent(rem_min - divisor.min_deg_, std::move(quot));
}

Int QLaurent::eval_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

Int QLaurent::limit_at_one(long order) const {
    if (order == 0) return eval_one();
    if (is_zero()) return 0;
    // Repeated exact synthetic division by (1-q); the shift by q^{min_deg}
    // does not change the value at q = 1.
    std::vector<Int> cur = coeffs_;
    for (long step = 0; step < order; ++step) {
        // this = (1-q) * h  =>  h_k = sum_{j<=k} c_j, and the full sum is 0.
        Int run = 0;
        for (Int& c : cur) {
            run += c;
            c = run;
        }
        if (run != 0)
            throw DomainError("limit_at_one: vanishing order at q=1 is too small");
        cur.pop_back();  // top partial sum is the asserted zero
    }
    Int s = 0;
    for (const Int& c : cur) s += c;
    return s;
}

std::string QLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = min_degree(); e <= max_degree(); ++e) {
        Int c = coeff(e);
        if (c == 0) continue;
        bool neg = c < 0;
        Int a = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QLaurent det_laurent(std::vector<std::vector<QLaurent>> m) {
    size_t n = m.size();
    if (n == 0) return QLaurent::one();
    QLaurent prev = QLaurent::one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return QLaurent::zero();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
            m[i][k] = QLaurent::zero();
        }
        prev = m[k][k];
    }
    QLaurent d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

QSeries::QSeries(long min_deg, long trunc_deg, std::vector<Int> coeffs)
    : min_deg_(min_deg), trunc_(trunc_deg), coeffs_(std::move(coeffs)) {
    if (min_deg_ + static_cast<long>(coeffs_.size()) - 1 > trunc_)
        coeffs_.resize(static_cast<size_t>(trunc_ - min_deg_ + 1));
    normalize();
}

void QSeries::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_deg_ += static_cast<long>(lead);
    }
}

QSeries QSeries::from(const QLaurent& p, long trunc_deg) {
    std::vector<Int> c;
    if (!p.is_zero())
        for (long e = p.min_degree(); e <= std::min(p.max_degree(), trunc_deg); ++e)
            c.push_back(p.coeff(e));
    return QSeries(p.is_zero() ? 0 : p.min_degree(), trunc_deg, std::move(c));
}

Int QSeries::coeff(long e) const {
    if (e > trunc_) throw DomainError("QSeries: coefficient beyond truncation");
    if (coeffs_.empty() || e < min_deg_) return 0;
    size_t i = static_cast<size_t>(e - min_deg_);
    return i < coeffs_.size() ? coeffs_[i] : 0;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long trunc = std::min(a.trunc_, b.trunc_);
    long lo = std::min(a.coeffs_.empty() ? trunc : a.min_deg_,
                       b.coeffs_.empty() ? trunc : b.min_deg_);
    std::vector<Int> out;
    for (long e = lo; e <= trunc; ++e) out.push_back(a.coeff(e) + b.coeff(e));
    return QSeries(lo, trunc, std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    long trunc = std::min(a.trunc_, b.trunc_);
    long lo = std::min(a.coeffs_.empty() ? trunc : a.min_deg_,
                       b.coeffs_.empty() ? trunc : b.min_deg_);
    std::vector<Int> out;
    for (long e = lo; e <= trunc; ++e) out.push_back(a.coeff(e) - b.coeff(e));
    return QSeries(lo, trunc, std::move(out));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return QSeries::zero(std::min(a.trunc_, b.trunc_));
    // Valid coefficients of the product run up to min over the two
    // truncation frontiers.
    long trunc = std::min(a.min_deg_ + b.trunc_, b.min_deg_ + a.trunc_);
    long lo = a.min_deg_ + b.min_deg_;
    std::vector<Int> out(static_cast<size_t>(trunc - lo + 1), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            size_t k = i + j;
            if (k >= out.size()) break;
            out[k] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(lo, trunc, std::move(out));
}

QSeries QSeries::inverse() const {
    if (coeffs_.empty()) throw DomainError("QSeries: inverse of zero");
    const Int& lead = coeffs_[0];
    if (lead != 1 && lead != -1)
        throw DomainError("QSeries: inverse requires lowest coefficient +-1");
    long n = trunc_ - min_deg_;  // compute inverse of the unit part to degree n
    std::vector<Int> inv(static_cast<size_t>(n) + 1, 0);
    inv[0] = lead;  // 1/lead = lead for +-1
    for (long k = 1; k <= n; ++k) {
        Int s = 0;
        for (long j = 1; j <= k; ++j) {
            size_t cj = static_cast<size_t>(j);
            if (cj < coeffs_.size() && coeffs_[cj] != 0)
                s += coeffs_[cj] * inv[static_cast<size_t>(k - j)];
        }
        inv[static_cast<size_t>(k)] = (lead == 1) ? -s : s;
    }
    return QSeries(-min_deg_, trunc_ - 2 * min_deg_, std::move(inv));
}

bool QSeries::agrees_with(const QSeries& o) const {
    long trunc = std::min(trunc_, o.trunc_);
    long lo = std::min(coeffs_.empty() ? 0 : min_deg_, o.coeffs_.empty() ? 0 : o.min_deg_);
    for (long e = lo; e <= trunc; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

bool QSeries::agrees_with(const QLaurent& p) const {
    long lo = std::min(coeffs_.empty() ? 0 : min_deg_, p.is_zero() ? 0 : p.min_degree());
    if (!p.is_zero() && p.max_degree() > trunc_) return false;
    for (long e = lo; e <= trunc_; ++e)
        if (coeff(e) != p.coeff(e)) return false;
    return true;
}

std::string QSeries::to_string() const {
    QLaurent p(coeffs_.empty() ? 0 : min_deg_, coeffs_);
    std::ostringstream os;
    os << p.to_string() << " + O(q^" << trunc_ + 1 << ")";
    return os.str();
}

}  // namespace skewtab
