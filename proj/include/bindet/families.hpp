#pragma once

// The three matrix families and the derived objects built from them:
//
//   D_{s,t}(n): binom(mu+i+j+s+t-4, j+t-1) + delta_{i+s, j+t}
//   E_{s,t}(n): same entries with -delta
//   B_{s,t}(n): the delta-free binomial matrix
//
// plus the sum-of-minors expansion, the switching vectors u, v and the
// switching prefactor, the transformed matrices used by the
// holonomic-ansatz and epsilon-limit reductions, and the two uniform
// ratio formulas R_{s,1} and R_{s,-1}.

#include "bindet/matrix.hpp"
#include "bindet/pochhammer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bindet {

enum class Family { D, E, B };

inline int delta_sign(Family f) {
    switch (f) {
        case Family::D: return 1;
        case Family::E: return -1;
        case Family::B: return 0;
    }
    return 0;
}

inline char family_letter(Family f) {
    return f == Family::D ? 'D' : (f == Family::E ? 'E' : 'B');
}

inline Family family_from_letter(char c) {
    switch (c) {
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'B': return Family::B;
    }
    throw std::invalid_argument("family_from_letter: expected D, E or B");
}

struct FamilySpec {
    Family family;
    long s = 0;
    long t = 0;
    long n = 1;

    std::string str() const {
        return std::string(1, family_letter(family)) + "(s=" + std::to_string(s) +
               ",t=" + std::to_string(t) + ",n=" + std::to_string(n) + ")";
    }
};

// Entry (i,j) of the family matrix, as a polynomial in mu.
inline Poly family_entry(const FamilySpec& spec, long i, long j) {
    Poly e = gbinom(mu_plus(i + j + spec.s + spec.t - 4), j + spec.t - 1);
    int sigma = delta_sign(spec.family);
    if (sigma != 0 && i + spec.s == j + spec.t) e += Poly(Rational(sigma));
    return e;
}

inline Matrix build_matrix(const FamilySpec& spec) {
    // n = 0 is the empty matrix, whose determinant is 1 by convention
    if (spec.n < 0) throw std::invalid_argument("build_matrix: n must be >= 0");
    return Matrix::build(spec.n, spec.n, [&](std::size_t i, std::size_t j) {
        return RatFunc(family_entry(spec, static_cast<long>(i), static_cast<long>(j)));
    });
}

// Family matrix with all entries evaluated at an integer (or rational) mu.
inline Matrix build_matrix_at(const FamilySpec& spec, const Rational& mu) {
    if (spec.n < 1) throw std::invalid_argument("build_matrix_at: n must be >= 1");
    return Matrix::build(spec.n, spec.n, [&](std::size_t i, std::size_t j) {
        return RatFunc(Poly(family_entry(spec, static_cast<long>(i), static_cast<long>(j)).eval(mu)));
    });
}

inline Poly determinant(const FamilySpec& spec) {
    return build_matrix(spec).det().as_poly();
}

// det of the family at mu -> a*mu + b (used for the mu+3 shifts and the
// mu -> 1-mu-6m reciprocity substitution).
inline Poly determinant_shifted(const FamilySpec& spec, const Rational& a, const Rational& b) {
    return determinant(spec).compose_affine(a, b);
}

// Sum-of-minors expansion over delta subsets.  For s >= t the deltas sit at
// (i, i+s-t) with i in {1..n-(s-t)} and the weight per chosen subset I is
// (-1)^((s-t+1)|I|) for E and (-1)^((s-t)|I|) for D; for s < t rows and
// columns switch roles.  With no deltas present this degenerates to the
// delta-free determinant.
inline Poly sum_of_minors(const FamilySpec& spec, long subset_cap = 20) {
    if (spec.family == Family::B)
        throw std::invalid_argument("sum_of_minors: expects family D or E");
    FamilySpec bspec{Family::B, spec.s, spec.t, spec.n};
    Matrix b = build_matrix(bspec);
    long gap = spec.s - spec.t;
    long delta_count = spec.n - (gap < 0 ? -gap : gap);
    if (delta_count <= 0) return b.det().as_poly();
    if (delta_count > subset_cap)
        throw std::invalid_argument("sum_of_minors: delta count exceeds subset cap");

    long weight_exp = (gap < 0 ? -gap : gap) + (spec.family == Family::E ? 1 : 0);
    Poly acc;
    for (unsigned long mask = 0; mask < (1ul << delta_count); ++mask) {
        MinorSpec ms;
        int bits = 0;
        for (long i = 0; i < delta_count; ++i) {
            if (!(mask >> i & 1)) continue;
            ++bits;
            std::size_t idx = static_cast<std::size_t>(i + 1);
            if (gap >= 0) {
                ms.deleted_rows.insert(idx);
                ms.deleted_cols.insert(idx + static_cast<std::size_t>(gap));
            } else {
                ms.deleted_rows.insert(idx + static_cast<std::size_t>(-gap));
                ms.deleted_cols.insert(idx);
            }
        }
        Poly term = minor_det(b, ms).as_poly();
        acc += (parity_sign(weight_exp * bits) < 0) ? -term : term;
    }
    return acc;
}

// The switching vectors of Definition vec.uv, as exact rational functions:
//   u_{t,n,i} = (mu+n-3)_{t+i+1-n} / (i+t-1)!
//   v_{s,n,j} = (j+s-1)! / (mu+n-3)_{s+j+1-n}
struct SwitchVectors {
    std::vector<RatFunc> u;  // index 1..n at [i-1]
    std::vector<RatFunc> v;
    long s = 0, t = 0, n = 0;
};

inline SwitchVectors switch_vectors(long s, long t, long n) {
    if (s < 0 || t < 0) throw std::invalid_argument("switch_vectors: s, t must avoid {-1,-2,...}");
    if (n < 1) throw std::invalid_argument("switch_vectors: n must be >= 1");
    SwitchVectors sv;
    sv.s = s;
    sv.t = t;
    sv.n = n;
    for (long i = 1; i <= n; ++i) {
        sv.u.push_back(poch(mu_plus(n - 3), t + i + 1 - n) / RatFunc(factorial(i + t - 1)));
        sv.v.push_back(RatFunc(factorial(i + s - 1)) / poch(mu_plus(n - 3), s + i + 1 - n));
    }
    return sv;
}

// Switching prefactor: prod_{i=0}^{t-s-1} (mu+s+i-1)_n / (i+s+1)_n;
// empty product (t = s) is 1.
inline RatFunc switch_prefactor(long s, long t, long n) {
    if (t - s < 0) throw std::invalid_argument("switch_prefactor: needs t - s >= 0");
    RatFunc acc(1);
    for (long i = 0; i <= t - s - 1; ++i)
        acc *= RatFunc(poch_rising(mu_plus(s + i - 1), n)) / RatFunc(Poly(poch_num(Rational(i + s + 1), n)));
    return acc;
}

// determinant(family, s, t, n) computed through the switching lemma:
// prefactor times determinant(family, t, s, n).
inline Poly switched_determinant(Family family, long s, long t, long n) {
    if (s < 0) throw std::invalid_argument("switched_determinant: needs integer s >= 0");
    if (t - s < 0) throw std::invalid_argument("switched_determinant: needs t - s >= 0");
    RatFunc v = switch_prefactor(s, t, n) * RatFunc(determinant({family, t, s, n}));
    return v.as_poly();
}

// ---------------------------------------------------------------------------
// Transformed matrices of the ansatz and epsilon reductions.  All are
// epsilon-free: the
// epsilon-columns carry their first-order coefficients, everything else its
// constant term.
// ---------------------------------------------------------------------------

enum class TransformedKind { Biglemma1Tilde, QuoED1Tilde, AppendixAtilde, AppendixBtilde };

struct TransformedMatrixSpec {
    TransformedKind kind;
    long s = 0;  // unused for QuoED1Tilde
    long n = 1;
};

// In the biglemma reductions the family pair (A, B) is (D, E) for even s
// and (E, D) for odd s.
inline Family biglemma_family(long s) { return (s % 2 == 0) ? Family::D : Family::E; }

// L * A_{s,1} * R of the biglemma1 reduction (n x n, polynomial):
//   (1,1) = binom(mu+s-1, 1)
//   (1,j) = binom(mu+j+s-1, j) - 1 +- [j >= s]            (2 <= j <= n)
//   (i,1) = 1                                             (2 <= i <= n)
//   (i,j) = binom(mu+i+j+s-3, j-1) -+ delta_{s, j-i+2}    (2 <= i,j <= n)
inline Matrix build_biglemma1_tilde(long s, long n) {
    if (s < 1 || n < 1) throw std::invalid_argument("biglemma1_tilde: needs s >= 1, n >= 1");
    int sigma = delta_sign(biglemma_family(s));
    return Matrix::build(n, n, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (i == 1 && j == 1) return RatFunc(gbinom(mu_plus(s - 1), 1));
        if (i == 1) {
            Poly e = gbinom(mu_plus(j + s - 1), j) - Poly(Rational(1));
            if (j >= s) e += Poly(Rational(sigma));  // sum_{k=1}^{j} delta_{s,k}
            return RatFunc(e);
        }
        if (j == 1) return RatFunc(1);
        Poly e = gbinom(mu_plus(i + j + s - 3), j - 1);
        if (s == j - i + 2) e -= Poly(Rational(sigma));
        return RatFunc(e);
    });
}

// The 2m x 2m matrix E-tilde from the quoED1 reduction (n = 2m+1 odd):
//   (i,1) = 1/(mu+i-2)_2
//   (i,j) = binom(mu+i+j-2, j-2) + delta_{i, j-1}    (2 <= j <= 2m)
// Its bottom-right (2m-1)-block is D_{1,0}^{mu+3}(2m-1).
inline Matrix build_quoED1_tilde(long n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("quoED1_tilde: needs odd n = 2m+1 >= 3");
    long dim = n - 1;
    return Matrix::build(dim, dim, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (j == 1) return RatFunc(Poly(Rational(1)), poch_rising(mu_plus(i - 2), 2));
        Poly e = gbinom(mu_plus(i + j - 2), j - 2);
        if (i == j - 1) e += Poly(Rational(1));
        return RatFunc(e);
    });
}

// Column block M shared by the two appendix matrices: the first n-2 columns
// of the opposite-family matrix B_{s-1,0}^{mu+3}(n-1), deltas included.
inline Poly appendix_block_entry(long s, long i, long j) {
    Poly e = gbinom(mu_plus(i + j + s - 2), j - 1);
    int sigma_b = -delta_sign(biglemma_family(s));
    if (j == i + s - 1) e += Poly(Rational(sigma_b));
    return e;
}

// A-tilde of the appendix: first column 1/(mu+s+i-3)_2, then M.
inline Matrix build_appendix_atilde(long s, long n) {
    if (s < 1 || n < 2) throw std::invalid_argument("appendix_atilde: needs s >= 1, n >= 2");
    long dim = n - 1;
    return Matrix::build(dim, dim, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (j == 1) return RatFunc(Poly(Rational(1)), poch_rising(mu_plus(s + i - 3), 2));
        return RatFunc(appendix_block_entry(s, i, j - 1));
    });
}

// B-tilde of the appendix: first column 1/(mu+s+i-1), then the same M.
inline Matrix build_appendix_btilde(long s, long n) {
    if (s < 1 || n < 2) throw std::invalid_argument("appendix_btilde: needs s >= 1, n >= 2");
    long dim = n - 1;
    return Matrix::build(dim, dim, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (j == 1) return RatFunc(Poly(Rational(1)), mu_plus(s + i - 1).to_poly());
        return RatFunc(appendix_block_entry(s, i, j - 1));
    });
}

inline Matrix build_transformed(const TransformedMatrixSpec& spec) {
    switch (spec.kind) {
        case TransformedKind::Biglemma1Tilde: return build_biglemma1_tilde(spec.s, spec.n);
        case TransformedKind::QuoED1Tilde: return build_quoED1_tilde(spec.n);
        case TransformedKind::AppendixAtilde: return build_appendix_atilde(spec.s, spec.n);
        case TransformedKind::AppendixBtilde: return build_appendix_btilde(spec.s, spec.n);
    }
    throw std::invalid_argument("build_transformed: unknown kind");
}

// ---------------------------------------------------------------------------
// The two uniform determinant-ratio formulas.
// ---------------------------------------------------------------------------

enum class RatioId { R_s1, R_sneg1 };

// R_{s,1}(n)  = (n+s-2)(mu-1)(mu+n+1)(mu+s) / (2n(s-1)(mu+2)(mu+n+s-1))
// R_{s,-1}(n) = 2s(n-1)(mu-3)(mu+n+s-2) / (mu(n+s)(mu+n-3)(mu+s-2))
inline RatFunc ratio_formula(RatioId id, long s, long n) {
    if (id == RatioId::R_s1) {
        Rational cnum = Rational(n + s - 2);
        Rational cden = Rational(2) * Rational(n) * Rational(s - 1);
        if (cden.is_zero()) throw pole_error("ratio_formula: R_{s,1} pole (s=1 or n=0)");
        Poly num = Poly(cnum) * mu_plus(-1).to_poly() * mu_plus(n + 1).to_poly() * mu_plus(s).to_poly();
        Poly den = Poly(cden) * mu_plus(2).to_poly() * mu_plus(n + s - 1).to_poly();
        return RatFunc(std::move(num), std::move(den));
    }
    Rational cnum = Rational(2) * Rational(s) * Rational(n - 1);
    Rational cden = Rational(n + s);
    if (cden.is_zero() || cnum.is_zero()) throw pole_error("ratio_formula: R_{s,-1} degenerate parameters");
    Poly num = Poly(cnum) * mu_plus(-3).to_poly() * mu_plus(n + s - 2).to_poly();
    Poly den = Poly(cden) * Poly::mu() * mu_plus(n - 3).to_poly() * mu_plus(s - 2).to_poly();
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace bindet
