#pragma once

#include <string>
#include <vector>

#include "skewtab/numeric.hpp"

namespace skewtab {

// Laurent polynomial in q with big-integer coefficients.  Normal form:
// empty coefficient list for zero, otherwise first and last coefficients
// nonzero.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long min_deg, std::vector<Int> coeffs);
    static QLaurent zero() { return {}; }
    static QLaurent one() { return monomial(1, 0); }
    static QLaurent monomial(Int c, long e);
    // [a] := 1 - q^a (a may be negative or zero; [0] = 0).
    static QLaurent bracket(long a);

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const { return min_deg_; }
    long max_degree() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
    QLaurent shifted(long e) const;  // * q^e

    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    // Exact division; throws InternalError if the quotient is not a Laurent
    // polynomial over the integers.
    QLaurent div_exact(const QLaurent& divisor) const;

    Int eval_one() const;  // value at q = 1

    // lim_{q->1} (1-q)^{-order} * this, exact; DomainError when the
    // vanishing order at q = 1 is smaller than `order`.
    Int limit_at_one(long order) const;

    std::string to_string() const;  // "1 - q^5 - q^6 + q^8" style

private:
    void normalize();
    long min_deg_ = 0;
    std::vector<Int> coeffs_;
};

QLaurent det_laurent(std::vector<std::vector<QLaurent>> m);  // fraction-free

// Truncated Laurent series: coefficients known exactly for all exponents
// <= trunc_deg (and the series is zero below min_deg).
class QSeries {
public:
    QSeries() = default;
    QSeries(long min_deg, long trunc_deg, std::vector<Int> coeffs);
    static QSeries zero(long trunc_deg) { return QSeries(0, trunc_deg, {}); }
    static QSeries one(long trunc_deg) { return QSeries(0, trunc_deg, {1}); }
    static QSeries from(const QLaurent& p, long trunc_deg);

    long trunc_deg() const { return trunc_; }
    long min_deg() const { return min_deg_; }
    Int coeff(long e) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Multiplicative inverse; requires the lowest coefficient to be +-1.
    QSeries inverse() const;

    bool agrees_with(const QSeries& o) const;  // on the common truncation range
    bool agrees_with(const QLaurent& p) const;

    std::string to_string() const;

private:
    void normalize();
    long min_deg_ = 0;
    long trunc_ = 0;
    std::vector<Int> coeffs_;  // coefficient of q^{min_deg_+i}
};

}  // namespace skewtab
