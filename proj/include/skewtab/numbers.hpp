#pragma once

#include "skewtab/numeric.hpp"

namespace skewtab {

// E_n: number of alternating permutations of size n (E_0 = E_1 = 1, E_2 = 1,
// E_3 = 2, E_4 = 5, ...), via the boustrophedon triangle.
Int euler_number(int n);

// Unsigned Genocchi number G_{2n} = 2n * E_{2n-1} / 2^{2n-1} (exact).
Int genocchi(int n);

// Median Genocchi number H_{2n+1}: strictly alternating pistols of length 2n.
Int median_genocchi(int n);

// Pistols: sequences a_1..a_len of positive integers with a_k <= (k+1)/2;
// strictly alternating means a_k >= a_{k+1} for odd k and a_k < a_{k+1} for
// even k.
Int pistol_count(int len, bool strict_alternating);

// Truncated pistols a_{2k+1}..a_{2n-1} with the same bounds and alternation;
// counts OOT(sigma_n^{(k)}) = G^{(k)}_{2n}.
Int truncated_pistol_count(int n, int k);

struct Superfactorials {
    Int phi;     // 1! 2! ... n!
    Int psi;     // 1! 3! ... (2n-1)!
    Int lambda;  // 1!! 3!! ... (2n-1)!!
};
Superfactorials superfactorials(int n);

// Bernoulli number B_n (B_1 = -1/2), exact; test-only cross-check for the
// Genocchi definition G_{2n} = 2 (-1)^{n-1} (4^n - 1) B_{2n}.
Rat bernoulli(int n);

}  // namespace skewtab
