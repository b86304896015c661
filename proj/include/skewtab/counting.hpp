#pragma once

#include <optional>
#include <string>

#include "skewtab/puzzles.hpp"

namespace skewtab {

enum class SytMethod {
    Brute,        // corner-removal recursion
    Aitken,       // n! det[1/(lambda_i - mu_j - i + j)!]
    OOF,          // Okounkov-Olshanski sum over SSYT(mu, d)
    NHLF,         // excited-diagram hook sum
    KT,           // Knutson-Tao puzzle heights
    EDForm,       // OO excited diagram formulation
    LozengeForm,  // lozenge tiling formulation
    REDForm,      // reverse excited diagram formulation
    FlagForm,     // flagged tableaux formulation
    EulerDet,     // thick zigzags only: |shape|! det[E_{2(n+i+j-1)-1}-hat]
};

enum class OotMethod {
    Enumerate,
    DetRows,         // det[ C(lambda_i - mu_j + j - 1, i - 1) ]
    DetCols,         // det[ C(lambda'_i, mu'_j + i - j) ]
    LascouxPragacz,  // det[ OOT(theta_i # theta_j) ]
    NinthVariation,  // 0/1-weighted tableau sum via content flags
};

struct CountReport {
    std::string shape;
    std::string method;
    Int value;
    std::optional<Int> term_count;  // for sum-over-objects methods
};

const char* to_string(SytMethod m);
const char* to_string(OotMethod m);
std::optional<SytMethod> syt_method_from_string(const std::string& name);
std::optional<OotMethod> oot_method_from_string(const std::string& name);

CountReport count_syt_method(const SkewShape& s, SytMethod m);
CountReport count_oot_method(const SkewShape& s, OotMethod m);

// All methods applicable to the shape (EulerDet only on thick zigzags, KT and
// the enumerations within budget).
std::vector<SytMethod> applicable_syt_methods(const SkewShape& s);

// d_c^{(lambda)}: largest row index i with (i, i+c) in [lambda].
int content_flag(const Partition& lambda, int c);

// One term of the flagged-tableaux formulation: the product over (j,t) in
// M(U) of the restricted hook lambda_t - t + i(j,t) - j + 1.
Int flagform_term(const SkewShape& s, const Tableau& U);
// The column-j factor of that product alone.
Int flagform_column_factor(const SkewShape& s, const Tableau& U, int col);

// OOT(delta_{n+2k}/delta_n) by the Genocchi-determinant formula.
Int thick_zigzag_oot(int n, int k);

// G^{(k)}_{2n} = C(2n, 2k) G_{2(n-k)} / (2k+1).
Int shifted_genocchi(int n, int k);

// Hankel identities for G-hat; returns (determinant, closed form) and checks
// they match.
enum class HankelVariant { Odd, Even };
std::pair<Rat, Rat> genocchi_hankel(int k, HankelVariant variant);

struct ProportionalityCheck {
    Int f;
    Int oot;
    Rat factor;  // 2^{k(2n+2k-1)} (k(2n+2k-1))! prod (2i-1)!/(2n+2i+2k-2)!
    bool holds;
};
ProportionalityCheck proportionality(int n, int k);

// G(lambda/mu) = (n!/prod h) * prod over the initial broken diagonals of the
// arm weights; rational in general.  G <= f <= OOT * G.
struct SandwichBounds {
    Rat lower;       // G
    Rat upper;       // OOT * G
    Int f;
    bool holds;
};
SandwichBounds sandwich_bounds(const SkewShape& s);

// Special families.
Int macmahon_box(int a, int b, int c);
// OOT((b+c')^{a+c} / b^a) = M(a, b, c).
Int thick_reverse_hook_oot(int a, int b, int c, int cprime);
// OOT(lambda/delta_{d+1}) = 2^{C(d,2)} for lambda with d parts, lambda_d >= d.
Int slim_staircase_oot(const Partition& lambda);
// f^{a^d/mu} by the rectangle product formula.
Int rectangle_syt(int a, int d, const Partition& mu);

}  // namespace skewtab
