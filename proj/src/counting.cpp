#include "skewtab/counting.hpp"

#include <algorithm>

#include "skewtab/numbers.hpp"

namespace skewtab {

const char* to_string(SytMethod m) {
    switch (m) {
        case SytMethod::Brute: return "brute";
        case SytMethod::Aitken: return "aitken";
        case SytMethod::OOF: return "oof";
        case SytMethod::NHLF: return "nhlf";
        case SytMethod::KT: return "kt";
        case SytMethod::EDForm: return "edform";
        case SytMethod::LozengeForm: return "lozengeform";
        case SytMethod::REDForm: return "redform";
        case SytMethod::FlagForm: return "flagform";
        case SytMethod::EulerDet: return "eulerdet";
    }
    return "?";
}

const char* to_string(OotMethod m) {
    switch (m) {
        case OotMethod::Enumerate: return "enumerate";
        case OotMethod::DetRows: return "detrows";
        case OotMethod::DetCols: return "detcols";
        case OotMethod::LascouxPragacz: return "lascouxpragacz";
        case OotMethod::NinthVariation: return "ninthvariation";
    }
    return "?";
}

std::optional<SytMethod> syt_method_from_string(const std::string& name) {
    for (SytMethod m : {SytMethod::Brute, SytMethod::Aitken, SytMethod::OOF,
                        SytMethod::NHLF, SytMethod::KT, SytMethod::EDForm,
                        SytMethod::LozengeForm, SytMethod::REDForm, SytMethod::FlagForm,
                        SytMethod::EulerDet})
        if (name == to_string(m)) return m;
    return std::nullopt;
}

std::optional<OotMethod> oot_method_from_string(const std::string& name) {
    for (OotMethod m : {OotMethod::Enumerate, OotMethod::DetRows, OotMethod::DetCols,
                        OotMethod::LascouxPragacz, OotMethod::NinthVariation})
        if (name == to_string(m)) return m;
    return std::nullopt;
}

namespace {

Rat oof_prefactor(const SkewShape& s) {
    return Rat(factorial(s.size())) / Rat(hook_product(s.outer()));
}

// enumeration methods also walk tableaux of the inner shape, so the whole
// outer partition participates in the budget
void require_enumerable(const SkewShape& s, const char* what) {
    long budget = max_cells_budget();
    if (s.size() > budget || s.outer().size() > 2 * budget)
        throw ResourceError(std::string(what) + ": shape exceeds cell budget");
}

std::optional<std::pair<int, int>> thick_zigzag_parameters(const SkewShape& s) {
    for (int k = 1; 2 * k <= s.outer().length() + 2; ++k) {
        for (int n = 0; n + 2 * k <= s.outer().length() + 2; ++n) {
            if (staircase(n + 2 * k) == s.outer() && staircase(n) == s.inner())
                return std::make_pair(n, k);
        }
    }
    return std::nullopt;
}

Int count_oot_det_rows(const SkewShape& s) {
    int d = s.num_rows();
    std::vector<std::vector<Int>> m(static_cast<size_t>(d),
                                    std::vector<Int>(static_cast<size_t>(d)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                binom(s.outer().part(i) - s.inner().part(j) + j - 1, i - 1);
    return det_integer(std::move(m));
}

}  // namespace

Int flagform_column_factor(const SkewShape& s, const Tableau& U, int col) {
    Partition lc = conjugate(s.outer());
    Partition mc = conjugate(s.inner());
    std::vector<int> entries = U.column(col);
    std::set<int> present(entries.begin(), entries.end());
    Int prod = 1;
    for (int t = 1; t <= lc.part(col); ++t) {
        if (present.count(t)) continue;
        int below = 0;
        for (int v : entries)
            if (v < t) ++below;
        int ijt = mc.part(col) + below;
        prod *= s.outer().part(t) - t + ijt - col + 1;
    }
    return prod;
}

Int flagform_term(const SkewShape& s, const Tableau& U) {
    Int prod = 1;
    for (int j = 1; j <= s.outer().part(1); ++j) prod *= flagform_column_factor(s, U, j);
    return prod;
}

int content_flag(const Partition& lambda, int c) {
    int best = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (i + c >= 1 && lambda.part(i) >= i + c) best = i;
    return best;
}

std::vector<SytMethod> applicable_syt_methods(const SkewShape& s) {
    std::vector<SytMethod> out = {SytMethod::Aitken};
    long budget = max_cells_budget();
    bool enumerable = s.size() <= budget && s.outer().size() <= 2 * budget;
    if (enumerable) {
        out.push_back(SytMethod::Brute);
        out.push_back(SytMethod::OOF);
        out.push_back(SytMethod::NHLF);
        out.push_back(SytMethod::EDForm);
        out.push_back(SytMethod::LozengeForm);
        out.push_back(SytMethod::REDForm);
        out.push_back(SytMethod::FlagForm);
    }
    if (enumerable && s.num_rows() + s.outer().part(1) <= 14)
        out.push_back(SytMethod::KT);
    if (thick_zigzag_parameters(s)) out.push_back(SytMethod::EulerDet);
    std::sort(out.begin(), out.end());
    return out;
}

CountReport count_syt_method(const SkewShape& s, SytMethod m) {
    CountReport rep;
    rep.shape = s.to_string();
    rep.method = to_string(m);
    switch (m) {
        case SytMethod::Brute:
            rep.value = count_syt(s, max_cells_budget());
            break;
        case SytMethod::Aitken: {
            int d = s.num_rows();
            std::vector<std::vector<Rat>> mat(static_cast<size_t>(d),
                                              std::vector<Rat>(static_cast<size_t>(d)));
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) {
                    long e = s.outer().part(i) - s.inner().part(j) - i + j;
                    mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                        e < 0 ? Rat(0) : Rat(1) / Rat(factorial(e));
                }
            rep.value = to_int_exact(Rat(factorial(s.size())) * det_rational(std::move(mat)),
                                     "Aitken determinant");
            break;
        }
        case SytMethod::OOF: {
            require_enumerable(s, "oof");
            Int sum = 0, terms = 0;
            for (const Tableau& T : enumerate_ssyt(SkewShape(s.inner(), {}), s.num_rows())) {
                Int prod = 1;
                for (Cell u : T.shape().cells()) prod *= oot_weight(s, u, T.at(u.row, u.col));
                if (prod != 0) ++terms;
                sum += prod;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "OOF");
            rep.term_count = terms;
            break;
        }
        case SytMethod::NHLF: {
            require_enumerable(s, "nhlf");
            Int sum = 0, terms = 0;
            for (const ExcitedDiagram& D : excited_diagrams(s)) {
                Int prod = 1;
                for (Cell u : D.cells) prod *= hook(s.outer(), u);
                sum += prod;
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "NHLF");
            rep.term_count = terms;
            break;
        }
        case SytMethod::KT: {
            Int sum = 0, terms = 0;
            for (const KTPuzzle& p :
                 enumerate_puzzles(s.outer(), s.inner(), s.outer(), s.num_rows(),
                                   s.outer().part(1))) {
                sum += p.height_product();
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "KT formula");
            rep.term_count = terms;
            break;
        }
        case SytMethod::EDForm: {
            require_enumerable(s, "edform");
            int d = s.num_rows();
            Int sum = 0, terms = 0;
            for (const ExcitedDiagram& D : oo_excited_diagrams(s)) {
                Int prod = 1;
                for (Cell u : D.cells)
                    prod *= s.outer().part(d + 1 - u.row) + u.row - u.col;
                sum += prod;
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "ED form");
            rep.term_count = terms;
            break;
        }
        case SytMethod::LozengeForm: {
            require_enumerable(s, "lozengeform");
            Int sum = 0, terms = 0;
            for (const LozengeTiling& t : enumerate_tilings(s)) {
                sum += t.weight_product();
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "lozenge form");
            rep.term_count = terms;
            break;
        }
        case SytMethod::REDForm: {
            require_enumerable(s, "redform");
            Int sum = 0, terms = 0;
            for (const ReverseExcitedDiagram& D : reverse_excited_diagrams(s)) {
                sum += broken_diagonal_weight(s, broken_diagonals(s, D));
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "RED form");
            rep.term_count = terms;
            break;
        }
        case SytMethod::FlagForm: {
            require_enumerable(s, "flagform");
            Int sum = 0, terms = 0;
            for (const Tableau& U : enumerate_sf(s)) {
                sum += flagform_term(s, U);
                ++terms;
            }
            rep.value = to_int_exact(oof_prefactor(s) * Rat(sum), "flag form");
            rep.term_count = terms;
            break;
        }
        case SytMethod::EulerDet: {
            auto nk = thick_zigzag_parameters(s);
            if (!nk) throw DomainError("eulerdet: shape is not a thick zigzag");
            auto [n, k] = *nk;
            std::vector<std::vector<Rat>> mat(static_cast<size_t>(k),
                                              std::vector<Rat>(static_cast<size_t>(k)));
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) {
                    long idx = 2 * (n + i + j - 1) - 1;
                    mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                        Rat(euler_number(static_cast<int>(idx))) / Rat(factorial(idx));
                }
            rep.value = to_int_exact(Rat(factorial(s.size())) * det_rational(std::move(mat)),
                                     "Euler determinant");
            break;
        }
    }
    return rep;
}

CountReport count_oot_method(const SkewShape& s, OotMethod m) {
    CountReport rep;
    rep.shape = s.to_string();
    rep.method = to_string(m);
    switch (m) {
        case OotMethod::Enumerate: {
            require_enumerable(s, "oot enumerate");
            rep.value = static_cast<long>(enumerate_oot(s).size());
            break;
        }
        case OotMethod::DetRows:
            rep.value = count_oot_det_rows(s);
            break;
        case OotMethod::DetCols: {
            Partition lc = conjugate(s.outer());
            Partition mc = conjugate(s.inner());
            int m1 = s.inner().part(1);
            std::vector<std::vector<Int>> mat(static_cast<size_t>(m1),
                                              std::vector<Int>(static_cast<size_t>(m1)));
            for (int i = 1; i <= m1; ++i)
                for (int j = 1; j <= m1; ++j)
                    mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                        binom(lc.part(i), mc.part(j) + i - j);
            rep.value = det_integer(std::move(mat));
            break;
        }
        case OotMethod::LascouxPragacz: {
            if (s.is_empty()) {
                rep.value = 1;
                break;
            }
            OutsideDecomposition dec = lascoux_pragacz(s);
            size_t k = dec.strips.size();
            std::vector<std::vector<Int>> mat(k, std::vector<Int>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) {
                    Substrip sub = substrip(dec.cutting_strip, dec.strips[i].min_content,
                                            dec.strips[j].max_content);
                    if (sub.kind == SubstripKind::Undefined)
                        mat[i][j] = 0;
                    else if (sub.kind == SubstripKind::Empty)
                        mat[i][j] = 1;
                    else {
                        Partition nu = complement_partition(s.outer(), sub.strip);
                        mat[i][j] = count_oot_det_rows(SkewShape(s.outer(), nu));
                    }
                }
            rep.value = det_integer(std::move(mat));
            break;
        }
        case OotMethod::NinthVariation: {
            require_enumerable(s, "ninth variation");
            Int count = 0;
            for_each_ssyt(
                s,
                [&](Cell u) {
                    return std::pair<int, int>(1, content_flag(s.outer(), content(u)));
                },
                [&](const Tableau&) { ++count; });
            rep.value = count;
            break;
        }
    }
    return rep;
}

Int thick_zigzag_oot(int n, int k) {
    if (k < 1 || n < 0) throw DomainError("thick_zigzag_oot: need k >= 1, n >= 0");
    Rat prod = 1;
    for (int i = 1; i <= k; ++i)
        prod *= Rat(factorial(2L * (n + i + k - 1))) / Rat(factorial(2L * i - 1));
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(k),
                                      std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            long idx = n + i + j - 1;
            mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                Rat(genocchi(static_cast<int>(idx))) / Rat(factorial(2 * idx));
        }
    return to_int_exact(prod * det_rational(std::move(mat)), "thick zigzag OOT");
}

Int shifted_genocchi(int n, int k) {
    if (!(n > k && k >= 0)) throw DomainError("shifted_genocchi: need n > k >= 0");
    return div_exact(binom(2 * n, 2 * k) * genocchi(n - k), Int(2 * k + 1),
                     "shifted Genocchi");
}

std::pair<Rat, Rat> genocchi_hankel(int k, HankelVariant variant) {
    if (k < 1) throw DomainError("genocchi_hankel: k must be >= 1");
    int shift = variant == HankelVariant::Odd ? 1 : 2;
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(k),
                                      std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long idx = i + j + shift;
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rat(genocchi(static_cast<int>(idx))) / Rat(factorial(2 * idx));
        }
    Rat det = det_rational(std::move(mat));
    Rat closed = 1;
    for (int i = 0; i < k; ++i) {
        long den = variant == HankelVariant::Odd ? 2L * i + 2 * k : 2L * i + 2 * k + 2;
        closed *= Rat(factorial(2L * i + 1)) / Rat(factorial(den));
    }
    if (det != closed) throw InternalError("Genocchi Hankel identity failed");
    return {det, closed};
}

ProportionalityCheck proportionality(int n, int k) {
    if (k < 1 || n < 0) throw DomainError("proportionality: need k >= 1, n >= 0");
    SkewShape s = thick_zigzag(n, k);
    if (s.size() > 40) throw ResourceError("proportionality: shape too large");
    ProportionalityCheck out;
    out.f = count_syt_method(s, SytMethod::Aitken).value;
    out.oot = count_oot_det_rows(s);
    long e = 1L * k * (2 * n + 2 * k - 1);
    Rat factor = Rat(pow2(static_cast<unsigned long>(e))) * Rat(factorial(e));
    for (int i = 1; i <= k; ++i)
        factor *= Rat(factorial(2L * i - 1)) / Rat(factorial(2L * n + 2 * i + 2 * k - 2));
    out.factor = factor;
    out.holds = Rat(out.f) == factor * Rat(out.oot);
    return out;
}

SandwichBounds sandwich_bounds(const SkewShape& s) {
    SandwichBounds out;
    out.f = count_syt_method(s, SytMethod::Aitken).value;
    // initial reverse excited diagram = [lambda*/mu*], i.e. the SF tableau
    // with every entry equal to its row index
    std::vector<std::vector<int>> rows(static_cast<size_t>(s.num_rows()));
    for (int i = 1; i <= s.num_rows(); ++i)
        rows[static_cast<size_t>(i - 1)].assign(
            static_cast<size_t>(s.outer().part(i) - s.inner().part(i)), i);
    ReverseExcitedDiagram init = reverse_excited_from_sf(s, Tableau(s, std::move(rows)));
    Int g_num = broken_diagonal_weight(s, broken_diagonals(s, init));
    Rat g = oof_prefactor(s) * Rat(g_num);
    out.lower = g;
    out.upper = g * Rat(count_oot_det_rows(s));
    out.holds = out.lower <= Rat(out.f) && Rat(out.f) <= out.upper;
    return out;
}

Int macmahon_box(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw DomainError("macmahon_box: negative side");
    Rat prod = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k)
                prod *= ratio(Int(i + j + k - 1), Int(i + j + k - 2));
    return to_int_exact(prod, "MacMahon box formula");
}

Int thick_reverse_hook_oot(int a, int b, int c, int cprime) {
    if (a < 0 || b < 0 || c < 0 || cprime < 0)
        throw DomainError("thick reverse hook: negative parameter");
    return macmahon_box(a, b, c);
}

Int slim_staircase_oot(const Partition& lambda) {
    int d = lambda.length();
    if (lambda.part(d) < d)
        throw DomainError("slim staircase: need lambda_d >= d");
    return pow2(static_cast<unsigned long>(1L * d * (d - 1) / 2));
}

Int rectangle_syt(int a, int d, const Partition& mu) {
    Partition lambda(std::vector<int>(static_cast<size_t>(d), a));
    if (!lambda.contains(mu)) throw DomainError("rectangle_syt: mu does not fit in a^d");
    Rat prod = Rat(factorial(1L * a * d - mu.size()));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= a; ++j) prod /= Int(i + j - 1);
    for (Cell u : mu.cells()) {
        prod *= ratio(Int(a - content(u)) * Int(d + content(u)), hook(mu, u));
    }
    return to_int_exact(prod, "rectangle product formula");
}

}  // namespace skewtab
