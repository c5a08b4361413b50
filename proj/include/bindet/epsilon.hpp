#pragma once

// The epsilon -> 0 limit machinery, realized through exact epsilon-free
// matrix reductions: every limit of a ratio of perturbed determinants is
// computed as a quotient of two ordinary exact determinants.
// No symbolic-epsilon arithmetic exists anywhere in the library.

#include "bindet/ansatz.hpp"

namespace bindet {

enum class EpsTarget { Biglemma2A, Biglemma2B, QuoED1 };

struct EpsLimitSpec {
    EpsTarget target;
    long r = 0;
    long m = 1;
};

// lim_{eps->0} of the target determinant ratio:
//   Biglemma2A: D_{2r+e,-1+e}(2m)   / E_{2r-1+e,-1+e}^{mu+3}(2m-1), m > r >= 1
//   Biglemma2B: E_{2r+1+e,-1+e}(2m+1) / D_{2r+e,-1+e}^{mu+3}(2m),   m > r >= 0
//   QuoED1:     E_{1+e,-1+e}(2m+1) / (e * D_{1,0}^{mu+3}(2m-1)),    m >= 1
// computed via the atilde/btilde pair resp. the quoED1 E-tilde matrix.
inline RatFunc eps_limit_ratio(const EpsLimitSpec& spec) {
    switch (spec.target) {
        case EpsTarget::Biglemma2A: {
            if (!(spec.m > spec.r && spec.r >= 1))
                throw std::invalid_argument("eps_limit_ratio: biglemma2a needs m > r >= 1");
            long s = 2 * spec.r, n = 2 * spec.m;
            RatFunc num = build_appendix_atilde(s, n).det();
            RatFunc den = build_appendix_btilde(s, n).det();
            if (den.is_zero()) throw singular_error("eps_limit_ratio: zero denominator determinant");
            return num / den;
        }
        case EpsTarget::Biglemma2B: {
            if (!(spec.m > spec.r && spec.r >= 0))
                throw std::invalid_argument("eps_limit_ratio: biglemma2b needs m > r >= 0");
            long s = 2 * spec.r + 1, n = 2 * spec.m + 1;
            RatFunc num = build_appendix_atilde(s, n).det();
            RatFunc den = build_appendix_btilde(s, n).det();
            if (den.is_zero()) throw singular_error("eps_limit_ratio: zero denominator determinant");
            return num / den;
        }
        case EpsTarget::QuoED1: {
            if (spec.m < 1) throw std::invalid_argument("eps_limit_ratio: quoED1 needs m >= 1");
            RatFunc num = build_quoED1_tilde(2 * spec.m + 1).det();
            Poly den = determinant_shifted({Family::D, 1, 0, 2 * spec.m - 1}, Rational(1), Rational(3));
            if (den.is_zero()) throw singular_error("eps_limit_ratio: zero denominator determinant");
            return num / RatFunc(den);
        }
    }
    throw std::invalid_argument("eps_limit_ratio: unknown target");
}

// The n x n table of leading epsilon-data behind the syseps reduction:
// first two columns carry first-order coefficients, the rest constant
// terms.  Two independent constructions must agree.

// (a) the closed entry table used by the syseps system.
inline Matrix eps_leading_table_displayed(long s, long n) {
    if (s < 1 || n < 2) throw std::invalid_argument("eps_leading_table: needs s >= 1, n >= 2");
    int sigma = delta_sign(biglemma_family(s));
    return Matrix::build(n, n, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (i == 1 && j == 1) return RatFunc(Poly(Rational(1)), mu_plus(s - 2).to_poly());
        if (i == 1 && j == 2) return RatFunc(1);
        if (i == 1) {
            Poly e = gbinom(mu_plus(j + s - 3), j - 2);
            if (j >= s + 2) e += Poly(Rational(sigma));  // sum_{k<=j} delta_{s,k-2}
            return RatFunc(e);
        }
        if (j == 1) return RatFunc(Poly(Rational(-1)), poch_rising(mu_plus(i + s - 4), 2));
        if (j == 2) return RatFunc(Poly(Rational(1)), mu_plus(i + s - 2).to_poly());
        Poly e = gbinom(mu_plus(i + j + s - 5), j - 3);
        if (s == j - i) e -= Poly(Rational(sigma));
        return RatFunc(e);
    });
}

// (b) from the epsilon expansion prescription: the entries of
// L * A_{s+e,-1+e} * R reduce (Pascal steps, plus the column-vector C added
// to column 2) to single binomials binom(x+2e, k+e); negative k takes its
// first-order coefficient, k >= 0 its constant term.
inline Matrix eps_leading_table_expansion(long s, long n) {
    if (s < 1 || n < 2) throw std::invalid_argument("eps_leading_table: needs s >= 1, n >= 2");
    int sigma = delta_sign(biglemma_family(s));
    auto leading = [](const AffineMu& x, long k) {
        return k < 0 ? gbinom_eps_first_order(x, k) : RatFunc(gbinom(x, k));
    };
    return Matrix::build(n, n, [&](std::size_t iu, std::size_t ju) {
        long i = static_cast<long>(iu), j = static_cast<long>(ju);
        if (i == 1 && j == 1) return leading(mu_plus(s - 3), -1);
        if (i == 1 && j == 2) return leading(mu_plus(s - 1), 0);
        if (i == 1) {
            RatFunc e = leading(mu_plus(j + s - 3), j - 2);
            if (j >= s + 2) e += RatFunc(sigma);
            return e;
        }
        if (j == 1) return leading(mu_plus(i + s - 5), -2);
        if (j == 2) return leading(mu_plus(i + s - 3), -1);
        RatFunc e = leading(mu_plus(i + j + s - 5), j - 3);
        if (s == j - i) e -= RatFunc(sigma);
        return e;
    });
}

inline bool eps_leading_coefficient_check(long s, long n) {
    if (n <= s) throw std::invalid_argument("eps_leading_coefficient_check: needs n > s");
    return eps_leading_table_displayed(s, n) == eps_leading_table_expansion(s, n);
}

// Telescoped chain of the closed-form route for E_{-1,2r-1}(2m+1):
//
//   E_{-1,2r-1}(2m+1) = [prod_{i=0}^{2r-3} R_{2r-1-i,-1}^{mu+3i}(2m+1-i)]
//                       * quoED1(m-r+1)|_{mu -> mu+6r-6}
//                       * D_{1,0}^{mu+6r-3}(2m-2r+1)
//                       * (mu-2)_{2m+1} / (2m)!
//                       * prod_{i=1}^{2r-1} (mu+i-2)_{2m+1} / (i)_{2m+1},
//
// i.e. the biglemma2 ratio applied 2r-2 times, the quoED1 base case, and
// the switching lemma with the epsilon-order zero extracted from (eps)_n.
inline bool eps_chain_check(long r, long m) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("eps_chain_check: needs m >= r >= 1");
    long n = 2 * m + 1;
    RatFunc rhs(1);
    for (long i = 0; i <= 2 * r - 3; ++i)
        rhs *= ratio_formula(RatioId::R_sneg1, 2 * r - 1 - i, n - i).compose_affine(Rational(1), Rational(3 * i));
    rhs *= cf_quoED1(m - r + 1).compose_affine(Rational(1), Rational(6 * r - 6));
    rhs *= RatFunc(determinant_shifted({Family::D, 1, 0, 2 * m - 2 * r + 1}, Rational(1), Rational(6 * r - 3)));
    rhs *= RatFunc(poch_rising(mu_plus(-2), n)) / RatFunc(Poly(factorial(2 * m)));
    for (long i = 1; i <= 2 * r - 1; ++i)
        rhs *= RatFunc(poch_rising(mu_plus(i - 2), n)) / RatFunc(Poly(poch_num(Rational(i), n)));
    Poly lhs = determinant({Family::E, -1, 2 * r - 1, n});
    return RatFunc(lhs) == rhs;
}

}  // namespace bindet
