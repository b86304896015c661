#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "skewtab/error.hpp"

namespace skewtab {

using Int = mpz_class;
using Rat = mpq_class;

Int factorial(long n);
Int double_factorial(long n);  // n!! for odd n >= -1

// binom(n, k) with the convention used by the determinantal formulas:
// zero unless 0 <= k <= n.
Int binom(long n, long k);

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Exact quotient; throws InternalError if the division has a remainder.
inline Int div_exact(const Int& a, const Int& b, const char* what = "division") {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw InternalError(std::string(what) + ": not an exact division");
    return q;
}

// mpq_class's two-argument constructor does not canonicalize; always build
// quotients through this helper.
inline Rat ratio(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int to_int_exact(const Rat& x, const char* what = "value") {
    if (x.get_den() != 1) throw InternalError(std::string(what) + ": not an integer");
    return x.get_num();
}

// det over exact rationals, Gaussian elimination with row pivoting.
Rat det_rational(std::vector<std::vector<Rat>> m);

// det over big integers, fraction-free Bareiss elimination.
Int det_integer(std::vector<std::vector<Int>> m);

// Budget knob shared by the enumeration-backed methods.  The default is
// generous for desk-scale shapes; SKEWTAB_MAX_CELLS overrides it.
long max_cells_budget();

}  // namespace skewtab
