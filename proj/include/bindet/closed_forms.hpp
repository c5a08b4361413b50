#pragma once

// Every closed-form product formula and closed-form ratio stated for the
// determinant families, encoded as ClosedFormExpr data values so the whole
// formula inventory is enumerable.  Factors are Pochhammer symbols with
// affine-in-mu bases; negative lengths are normalized away via
// (a)_{-b} = 1/(a-b)_b and negative slopes via (-a)_b = (-1)^b (a-b+1)_b
// at construction time.

#include "bindet/families.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bindet {

struct PochFactor {
    AffineMu base;
    long length;   // >= 0 after normalization
    int exponent;  // +-1, +-2
};

class ClosedFormExpr {
public:
    int sign = 1;
    long two_power = 0;
    Rational prefactor{1};
    std::vector<PochFactor> factors;

    // (base)_length ^ exponent, normalizing negative lengths and slopes.
    void add(AffineMu base, long length, int exponent) {
        if (length < 0) {
            base = base + length;
            length = -length;
            exponent = -exponent;
        }
        if (base.slope.sign() < 0) {
            sign *= parity_sign(length * exponent);
            base = -base - length + 1;
        }
        if (length == 0) return;
        factors.push_back({base, length, exponent});
    }

    void mul_rational(const Rational& c) { prefactor *= c; }
    void div_rational(const Rational& c) { prefactor /= c; }

    RatFunc evaluate() const {
        RatFunc acc{Poly(prefactor * pow2(two_power) * Rational(sign))};
        for (const auto& f : factors) {
            RatFunc p{poch_rising(f.base, f.length)};
            for (int e = 0; e < (f.exponent < 0 ? -f.exponent : f.exponent); ++e)
                acc = (f.exponent > 0) ? acc * p : acc / p;
        }
        return acc;
    }
};

// ---------------------------------------------------------------------------
// Product formulas for determinants.
// ---------------------------------------------------------------------------

// Delta-free determinant: prod_{i=0}^{t-1} (mu+s+i-1)_n / (i+1)_n.
inline RatFunc cf_detwithnoKD(long s, long t, long n) {
    if (t < 0 || n < 1) throw std::invalid_argument("cf_detwithnoKD: needs t >= 0, n >= 1");
    ClosedFormExpr e;
    for (long i = 0; i < t; ++i) {
        e.add(mu_plus(s + i - 1), n, 1);
        e.div_rational(poch_num(Rational(i + 1), n));
    }
    return e.evaluate();
}

// E_{1,1}(2m-1), the compact form.
inline ClosedFormExpr build_E11(long m) {
    if (m < 1) throw std::invalid_argument("E11: needs m >= 1");
    ClosedFormExpr e;
    e.sign = parity_sign(m - 1);
    e.two_power = 2 * m - 1;
    e.add(half_mu_plus(Rational(-1, 2)), m, 1);
    e.div_rational(poch_num(Rational(m), m));
    for (long i = 1; i <= m - 1; ++i) {
        e.add(mu_plus(2 * i + 1), i - 1, 2);
        e.add(half_mu_plus(Rational(2 * i + 1)), i, 2);
        e.div_rational(poch_num(Rational(i), i).pow(2));
        e.add(half_mu_plus(Rational(i + 1)), i - 1, -2);
    }
    return e;
}

inline RatFunc cf_E11(long m) { return build_E11(m).evaluate(); }

// Shared product P_{m,r} of the E_{s,0} closed forms.
inline void append_Pmr(ClosedFormExpr& e, long m, long r) {
    for (long i = 1; i <= m - r - 1; ++i) {
        e.add(mu_plus(2 * i + 6 * r), i, 2);
        e.add(half_mu_plus(Rational(2 * i + 3 * r + 1)), i, 2);
        e.div_rational(poch_num(Rational(i + 1), i).pow(2));
        e.add(half_mu_plus(Rational(i + 3 * r)), i, -2);
    }
}

enum class Es0Variant { EvenZero, Even, OddDim, EvenDim };
// EvenZero: E_{2r,0}(2m-1) = 0        Even:    E_{2r,0}(2m)
// OddDim:   E_{2r+1,0}(2m-1)          EvenDim: E_{2r+1,0}(2m)

inline RatFunc cf_Es0(Es0Variant variant, long m, long r) {
    if (!(m > r && r >= 0)) throw std::invalid_argument("cf_Es0: needs m > r >= 0");
    if (variant == Es0Variant::EvenZero) return RatFunc(0);
    ClosedFormExpr e;
    switch (variant) {
        case Es0Variant::Even:
            e.sign = parity_sign(m - r);
            e.add(half_mu_plus(Rational(6 * r - 1, 2)), m - r, 1);
            e.div_rational(poch_num(Rational(1, 2), m - r));
            break;
        case Es0Variant::OddDim:
            e.mul_rational(poch_num(Rational(m - r), m - r - 1));
            e.add(half_mu_plus(Rational(2 * m + r - 1)), m - r - 1, -1);
            break;
        case Es0Variant::EvenDim:
            e.mul_rational(Rational(2));
            e.add(mu_plus(2 * m + 4 * r + 1), m - r - 1, 1);
            e.add(half_mu_plus(Rational(m + 2 * r + 1)), m - r - 1, -1);
            break;
        default: break;
    }
    append_Pmr(e, m, r);
    return e.evaluate();
}

// E_{2r-1,1}(2m-1).
inline RatFunc cf_Krat37nice(long m, long r) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("cf_Krat37nice: needs m >= r >= 1");
    ClosedFormExpr e;
    e.sign = parity_sign(m - r);
    e.add(mu_plus(-1), 1, 1);
    e.add(mu_plus(2 * r - 1), 2 * m - 2, 1);
    e.div_rational(factorial(2 * r - 2));
    e.div_rational(poch_num(Rational(m + r - 1), m - r + 1));
    e.add(half_mu_plus(Rational(r)), m - r, -1);
    for (long i = 1; i <= m - r; ++i) {
        e.add(mu_plus(2 * i + 6 * r - 5), i - 1, 2);
        e.add(half_mu_plus(Rational(2 * i + 3 * r - 2)), i, 2);
        e.div_rational(poch_num(Rational(i), i).pow(2));
        e.add(half_mu_plus(Rational(i + 3 * r - 2)), i - 1, -2);
    }
    return e.evaluate();
}

// E_{1,2r-1}(2m-1), in the l1*l2*l3 factored shape with the 2^{4m-3r} front.
inline RatFunc cf_Krat37ugly(long m, long r) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("cf_Krat37ugly: needs m >= r >= 1");
    ClosedFormExpr e;
    e.two_power = 4 * m - 3 * r;
    // l1 (mu-free)
    for (long i = 0; i <= 2 * r - 3; ++i) e.mul_rational(factorial(i));
    for (long i = 0; i <= r - 2; ++i) {
        e.mul_rational(factorial(2 * m - 2 * i - 3).pow(2));
        e.div_rational(factorial(m - i - 2).pow(2));
        e.div_rational(factorial(2 * m + 2 * i - 1));
        e.div_rational(factorial(2 * m + 2 * i + 1));
    }
    // l2
    e.add(mu_plus(-1), 1, 1);
    e.add(half_mu_plus(Rational(2 * r - 1, 2)), m - r, 1);
    for (long i = 1; i <= 2 * r - 2; ++i) e.add(mu_plus(i - 1), 2 * m + 2 * r - 2 * i - 1, 1);
    // l3
    e.sign *= parity_sign(m - r);
    e.two_power += (m - r) * (m - r - 1);
    for (long i = 0; 2 * i <= m - r - 1; ++i) {
        e.add(half_mu_plus(Rational(6 * i + 6 * r - 1, 2)), m - r - 2 * i - 1, 2);
        e.add(AffineMu(Rational(-1, 2), Rational(-3 * m + 3 * i + 3)), m - r - 2 * i, 2);
    }
    // the factorial product prod_{i=0}^{m-1} i!(i+1)! / ((2i)!(2i+2)!)
    for (long i = 0; i <= m - 1; ++i) {
        e.mul_rational(factorial(i) * factorial(i + 1));
        e.div_rational(factorial(2 * i) * factorial(2 * i + 2));
    }
    return e.evaluate();
}

// D_{2r,1}(2m).
inline RatFunc cf_KTConj20(long m, long r) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("cf_KTConj20: needs m >= r >= 1");
    ClosedFormExpr e;
    e.sign = parity_sign(m - r);
    e.add(mu_plus(-1), 1, 1);
    e.add(mu_plus(2 * r), 2 * m - 1, 1);
    e.div_rational(factorial(2 * r - 1));
    e.div_rational(poch_num(Rational(m + r), m - r + 1));
    e.add(half_mu_plus(Rational(2 * r + 1, 2)), m - r, -1);
    for (long i = 1; i <= m - r; ++i) {
        e.add(mu_plus(2 * i + 6 * r - 2), i - 1, 2);
        e.add(half_mu_plus(Rational(4 * i + 6 * r - 1, 2)), i, 2);
        e.div_rational(poch_num(Rational(i), i).pow(2));
        e.add(half_mu_plus(Rational(2 * i + 6 * r - 1, 2)), i - 1, -2);
    }
    return e.evaluate();
}

// E_{-1,2r-1}(2m+1).
inline RatFunc cf_Eneg1CF(long m, long r) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("cf_Eneg1CF: needs m >= r >= 1");
    ClosedFormExpr e;
    e.sign = parity_sign(m - r);
    e.add(AffineMu(Rational(-1), Rational(3)), 1, 1);  // (3 - mu)
    e.mul_rational(poch_num(Rational(m + r + 1), m - r));
    e.two_power = -(2 * m - 2 * r + 1);
    e.add(half_mu_plus(Rational(2 * r - 3, 2)), m - r + 1, -1);
    for (long i = 1; i <= 2 * m; ++i) {
        e.add(mu_plus(i - 3), 2 * r, 1);
        e.div_rational(poch_num(Rational(i), 2 * r));
    }
    for (long i = 1; i <= m - r; ++i) {
        e.add(mu_plus(2 * i + 6 * r - 3), i, 2);
        e.add(half_mu_plus(Rational(2 * i + 3 * r - 1)), i - 1, 2);
        e.div_rational(poch_num(Rational(i), i).pow(2));
        e.add(half_mu_plus(Rational(i + 3 * r - 1)), i - 1, -2);
    }
    return e.evaluate();
}

// D_{-1,2r}(2m).
inline RatFunc cf_ktconj21(long m, long r) {
    if (!(m > r && r >= 0)) throw std::invalid_argument("cf_ktconj21: needs m > r >= 0");
    ClosedFormExpr e;
    e.sign = parity_sign(m - r);
    e.add(mu_plus(-3), 1, 1);
    e.add(half_mu_plus(Rational(2 * r - 1, 2)), m - r - 1, 1);
    e.div_rational(poch_num(Rational(2 * r + 1), m - r));
    for (long i = 1; i <= 2 * m; ++i) {
        e.add(mu_plus(i - 3), 2 * r, 1);
        e.div_rational(poch_num(Rational(i), 2 * r));
    }
    for (long i = 1; i <= m - r - 1; ++i) {
        e.add(mu_plus(2 * i + 6 * r), i, 2);
        e.add(half_mu_plus(Rational(4 * i + 6 * r + 1, 2)), i - 1, 2);
        e.div_rational(poch_num(Rational(i), i).pow(2));
        e.add(half_mu_plus(Rational(2 * i + 6 * r + 1, 2)), i - 1, -2);
    }
    return e.evaluate();
}

// Both sides of the Pochhammer cancellation identity, for the property suite.
inline RatFunc cancelpoch_lhs(long m) {
    ClosedFormExpr e;
    e.two_power = (m - 1) * (m - 2) / 2;
    for (long i = 1; 2 * i <= m; ++i) {
        e.add(half_mu_plus(Rational(6 * i - 1, 2)), m - 2 * i, 1);
        e.add(half_mu_plus(Rational(2 * m - i)), m - 2 * i + 1, 1);
    }
    return e.evaluate();
}

inline RatFunc cancelpoch_rhs(long m) {
    ClosedFormExpr e;
    for (long i = 1; i <= m - 1; ++i) {
        e.add(mu_plus(2 * i + 1), i - 1, 1);
        e.add(half_mu_plus(Rational(2 * i + 1)), i, 1);
        e.add(half_mu_plus(Rational(i + 1)), i - 1, -1);
    }
    return e.evaluate();
}

// ---------------------------------------------------------------------------
// Closed-form ratios.
// ---------------------------------------------------------------------------

// The quoED1 limit ratio: lim E_{1+e,-1+e}(2m+1) / (e * D_{1,0}^{mu+3}(2m-1)).
inline RatFunc cf_quoED1(long m) {
    if (m < 1) throw std::invalid_argument("cf_quoED1: needs m >= 1");
    ClosedFormExpr e;
    e.sign = -1;
    e.mul_rational(Rational(4 * m - 2) / Rational(m + 1));
    e.add(mu_plus(-3), 1, 1);
    e.add(mu_plus(2 * m + 1), 1, 1);
    e.add(mu_plus(-1), 1, -1);
    e.add(mu_plus(1), 1, -1);
    e.add(mu_plus(3), 1, -1);
    e.add(mu_plus(2 * m - 2), 1, -1);
    return e.evaluate();
}

// E_{1,1}(2m) / D_{0,1}^{mu+3}(2m-1).
inline RatFunc cf_EDCor1(long m) {
    if (m < 1) throw std::invalid_argument("cf_EDCor1: needs m >= 1");
    ClosedFormExpr e;
    e.sign = -1;
    e.mul_rational(Rational(2) * Rational(2 * m - 1) / Rational(m));
    e.add(mu_plus(0), 1, 1);
    e.add(mu_plus(2 * m + 1), 1, 1);
    e.add(mu_plus(3), 1, -1);
    e.add(mu_plus(2 * m), 1, -1);
    return e.evaluate();
}

// E_{2,2}(2m+1) / D_{1,2}^{mu+3}(2m).
inline RatFunc cf_EDCor2(long m) {
    if (m < 1) throw std::invalid_argument("cf_EDCor2: needs m >= 1");
    ClosedFormExpr e;
    e.sign = -1;
    e.mul_rational(Rational(2 * m + 1) / Rational(m + 1));
    e.add(mu_plus(0), 1, 1);
    e.add(mu_plus(2 * m + 3), 1, 1);
    e.add(mu_plus(2 * m + 2), 1, -1);
    return e.evaluate();
}

enum class TriangleId {
    E1_1, E1_2, E1_3,          // m > r >= 1
    Eneg1_1, Eneg1_2, Eneg1_3, // m - 1 > r >= 1
    D1_1, D1_2, D1_3,          // m > r >= 1
    Dneg1_1, Dneg1_2, Dneg1_3  // m > r >= 0
};

inline RatFunc cf_triangle(TriangleId id, long m, long r) {
    ClosedFormExpr e;
    switch (id) {
        case TriangleId::E1_1:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleE1: needs m > r >= 1");
            e.add(mu_plus(2 * m + 4 * r - 1), m - r + 1, 1);
            e.add(half_mu_plus(Rational(2 * m + r + 1)), m - r, 1);
            e.div_rational(poch_num(Rational(m - r + 1), m - r + 1));
            e.add(half_mu_plus(Rational(m + 2 * r)), m - r, -1);
            break;
        case TriangleId::E1_2:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleE1: needs m > r >= 1");
            e.sign = parity_sign(m - r);
            e.add(half_mu_plus(Rational(2 * m + r + 1)), m - r, 1);
            e.add(half_mu_plus(Rational(6 * r - 1, 2)), m - r + 1, 1);
            e.div_rational(poch_num(Rational(3, 2), m - r));
            e.div_rational(poch_num(Rational(m - r), m - r));
            break;
        case TriangleId::E1_3:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleE1: needs m > r >= 1");
            e.sign = parity_sign(m - r);
            e.mul_rational(poch_num(Rational(1, 2), m - r + 1));
            e.add(mu_plus(2 * m + 4 * r - 1), m - r + 1, 1);
            e.div_rational(Rational(2 * m - 2 * r + 1));
            e.add(half_mu_plus(Rational(m + 2 * r)), m - r, -1);
            e.add(half_mu_plus(Rational(6 * r - 1, 2)), m - r + 1, -1);
            break;
        case TriangleId::Eneg1_1:
            if (!(m - 1 > r && r >= 1)) throw std::invalid_argument("triangleEneg1: needs m-1 > r >= 1");
            e.add(mu_plus(2 * m - 3), 2 * r + 1, 1);
            e.add(mu_plus(2 * m + 4 * r - 2), m - r - 1, 1);
            e.add(half_mu_plus(Rational(2 * m + r - 1)), m - r - 1, 1);
            e.mul_rational(Rational(1, 2));
            e.div_rational(poch_num(Rational(2 * m - 1), 2 * r + 1));
            e.div_rational(poch_num(Rational(m - r - 1), m - r - 1));
            e.add(half_mu_plus(Rational(m + 2 * r - 1)), m - r - 1, -1);
            break;
        case TriangleId::Eneg1_2:
            if (!(m - 1 > r && r >= 1)) throw std::invalid_argument("triangleEneg1: needs m-1 > r >= 1");
            e.sign = parity_sign(m - r);
            e.mul_rational(poch_num(Rational(m - r), m - r));
            e.add(mu_plus(2 * r - 2), 2 * m, 1);
            e.add(half_mu_plus(Rational(2 * m + 4 * r - 3, 2)), m - r, 1);
            e.div_rational(poch_num(Rational(2 * r), 2 * m));
            e.add(half_mu_plus(Rational(6 * r - 1, 2)), m - r, -1);
            e.add(mu_plus(3 * m + 3 * r - 3), m - r, -1);
            break;
        case TriangleId::Eneg1_3:
            if (!(m - 1 > r && r >= 1)) throw std::invalid_argument("triangleEneg1: needs m-1 > r >= 1");
            e.sign = -parity_sign(m - r - 1);
            e.two_power = 2 * (m - r - 1);
            e.mul_rational(poch_num(Rational(2 * r), 2 * m - 2 * r - 1));
            e.add(half_mu_plus(Rational(2 * m + r - 2)), m - r, 1);
            e.add(half_mu_plus(Rational(6 * r - 1, 2)), m - r - 1, 1);
            e.div_rational(poch_num(Rational(m - r), m - r));
            e.div_rational(poch_num(Rational(m - r - 1), m - r - 1));
            e.add(mu_plus(2 * r - 2), 2 * m - 2 * r - 1, -1);
            break;
        case TriangleId::D1_1:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleD1: needs m > r >= 1");
            e.add(mu_plus(2 * m + 4 * r - 4), m - r + 1, 1);
            e.add(half_mu_plus(Rational(4 * m + 2 * r - 1, 2)), m - r, 1);
            e.div_rational(poch_num(Rational(m - r + 1), m - r + 1));
            e.add(half_mu_plus(Rational(2 * m + 4 * r - 3, 2)), m - r, -1);
            break;
        case TriangleId::D1_2:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleD1: needs m > r >= 1");
            e.sign = parity_sign(m - r);
            e.two_power = -(2 * m - 2 * r);
            e.mul_rational(poch_num(Rational(m - r), m - r));
            e.mul_rational(poch_num(Rational(m - r + 1), m - r + 1));
            e.add(half_mu_plus(Rational(4 * m + 2 * r - 1, 2)), m - r, -1);
            e.add(half_mu_plus(Rational(3 * r - 2)), m - r + 1, -1);
            break;
        case TriangleId::D1_3:
            if (!(m > r && r >= 1)) throw std::invalid_argument("triangleD1: needs m > r >= 1");
            e.sign = parity_sign(m - r);
            e.mul_rational(poch_num(Rational(m - r), m - r));
            e.add(half_mu_plus(Rational(m + 2 * r - 2)), m - r, 1);
            e.add(half_mu_plus(Rational(3 * r - 2)), m - r + 1, -1);
            e.add(mu_plus(3 * m + 3 * r - 3), m - r - 1, -1);
            break;
        case TriangleId::Dneg1_1:
            if (!(m > r && r >= 0)) throw std::invalid_argument("triangleDneg1: needs m > r >= 0");
            e.add(mu_plus(2 * m - 2), 2 * r + 2, 1);
            e.add(mu_plus(2 * m + 4 * r + 1), m - r - 1, 1);
            e.add(half_mu_plus(Rational(4 * m + 2 * r + 1, 2)), m - r - 1, 1);
            e.div_rational(poch_num(Rational(2 * m), 2 * r + 2));
            e.div_rational(poch_num(Rational(m - r), m - r - 1));
            e.add(half_mu_plus(Rational(2 * m + 4 * r + 1, 2)), m - r - 1, -1);
            break;
        case TriangleId::Dneg1_2:
            if (!(m > r && r >= 0)) throw std::invalid_argument("triangleDneg1: needs m > r >= 0");
            e.sign = parity_sign(m - r);
            e.two_power = 2 * m - 2 * r - 1;
            e.mul_rational(poch_num(Rational(1, 2), m - r));
            e.add(half_mu_plus(Rational(m + 2 * r + 1)), m - r - 1, 1);
            e.add(mu_plus(2 * r - 1), 2 * m + 1, 1);
            e.div_rational(poch_num(Rational(2 * r + 1), 2 * m + 1));
            e.add(half_mu_plus(Rational(3 * r + 1)), m - r - 1, -1);
            e.add(mu_plus(3 * m + 3 * r), m - r, -1);
            break;
        case TriangleId::Dneg1_3:
            if (!(m > r && r >= 0)) throw std::invalid_argument("triangleDneg1: needs m > r >= 0");
            e.sign = parity_sign(m - r);
            e.mul_rational(poch_num(Rational(2 * r + 1), 2 * m - 2 * r - 1));
            e.add(half_mu_plus(Rational(3 * r + 1)), m - r - 1, 1);
            e.add(half_mu_plus(Rational(4 * m + 2 * r - 1, 2)), m - r, 1);
            e.div_rational(poch_num(Rational(1, 2), m - r));
            e.div_rational(poch_num(Rational(m - r), m - r - 1));
            e.add(mu_plus(2 * r - 1), 2 * m - 2 * r - 1, -1);
            break;
    }
    return e.evaluate();
}

// The reciprocity substitution: determinant(family, 0, 0, 2m-2r+2) with
// mu -> 1 - mu - 6m.
inline Poly cf_KTConj24_rhs(Family family, long m, long r) {
    if (!(m >= r && r >= 1)) throw std::invalid_argument("cf_KTConj24_rhs: needs m >= r >= 1");
    return determinant_shifted({family, 0, 0, 2 * m - 2 * r + 2}, Rational(-1), Rational(1 - 6 * m));
}

// ---------------------------------------------------------------------------
// Enumerable registry (used by the CLI and coverage audits).  Each entry
// evaluates at concrete (m, r); formulas that ignore r accept any value.
// ---------------------------------------------------------------------------

struct ClosedFormEntry {
    std::string id;
    bool uses_r;
    std::function<RatFunc(long m, long r)> eval;
};

inline const std::vector<ClosedFormEntry>& closed_form_registry() {
    static const std::vector<ClosedFormEntry> reg = {
        {"E11", false, [](long m, long) { return cf_E11(m); }},
        {"Es0-even-zero", true, [](long m, long r) { return cf_Es0(Es0Variant::EvenZero, m, r); }},
        {"Es0-even", true, [](long m, long r) { return cf_Es0(Es0Variant::Even, m, r); }},
        {"Es0-odd-dim", true, [](long m, long r) { return cf_Es0(Es0Variant::OddDim, m, r); }},
        {"Es0-even-dim", true, [](long m, long r) { return cf_Es0(Es0Variant::EvenDim, m, r); }},
        {"krat37nice", true, [](long m, long r) { return cf_Krat37nice(m, r); }},
        {"krat37ugly", true, [](long m, long r) { return cf_Krat37ugly(m, r); }},
        {"ktconj20", true, [](long m, long r) { return cf_KTConj20(m, r); }},
        {"eneg1cf", true, [](long m, long r) { return cf_Eneg1CF(m, r); }},
        {"ktconj21", true, [](long m, long r) { return cf_ktconj21(m, r); }},
        {"quoED1", false, [](long m, long) { return cf_quoED1(m); }},
        {"EDCor1", false, [](long m, long) { return cf_EDCor1(m); }},
        {"EDCor2", false, [](long m, long) { return cf_EDCor2(m); }},
        {"cancelpoch-lhs", false, [](long m, long) { return cancelpoch_lhs(m); }},
        {"cancelpoch-rhs", false, [](long m, long) { return cancelpoch_rhs(m); }},
        {"triangleE1-1", true, [](long m, long r) { return cf_triangle(TriangleId::E1_1, m, r); }},
        {"triangleE1-2", true, [](long m, long r) { return cf_triangle(TriangleId::E1_2, m, r); }},
        {"triangleE1-3", true, [](long m, long r) { return cf_triangle(TriangleId::E1_3, m, r); }},
        {"triangleEneg1-1", true, [](long m, long r) { return cf_triangle(TriangleId::Eneg1_1, m, r); }},
        {"triangleEneg1-2", true, [](long m, long r) { return cf_triangle(TriangleId::Eneg1_2, m, r); }},
        {"triangleEneg1-3", true, [](long m, long r) { return cf_triangle(TriangleId::Eneg1_3, m, r); }},
        {"triangleD1-1", true, [](long m, long r) { return cf_triangle(TriangleId::D1_1, m, r); }},
        {"triangleD1-2", true, [](long m, long r) { return cf_triangle(TriangleId::D1_2, m, r); }},
        {"triangleD1-3", true, [](long m, long r) { return cf_triangle(TriangleId::D1_3, m, r); }},
        {"triangleDneg1-1", true, [](long m, long r) { return cf_triangle(TriangleId::Dneg1_1, m, r); }},
        {"triangleDneg1-2", true, [](long m, long r) { return cf_triangle(TriangleId::Dneg1_2, m, r); }},
        {"triangleDneg1-3", true, [](long m, long r) { return cf_triangle(TriangleId::Dneg1_3, m, r); }},
        {"R_s1", true, [](long m, long r) { return ratio_formula(RatioId::R_s1, r, m); }},
        {"R_sneg1", true, [](long m, long r) { return ratio_formula(RatioId::R_sneg1, r, m); }},
        {"biglemma1-a", true, [](long m, long r) { return ratio_formula(RatioId::R_s1, 2 * r, 2 * m); }},
        {"biglemma1-b", true, [](long m, long r) { return ratio_formula(RatioId::R_s1, 2 * r + 1, 2 * m + 1); }},
        {"biglemma2-a", true, [](long m, long r) { return ratio_formula(RatioId::R_sneg1, 2 * r, 2 * m); }},
        {"biglemma2-b", true, [](long m, long r) { return ratio_formula(RatioId::R_sneg1, 2 * r + 1, 2 * m + 1); }},
        {"ktconj24-D-map", true, [](long m, long r) { return RatFunc(cf_KTConj24_rhs(Family::D, m, r)); }},
        {"ktconj24-E-map", true, [](long m, long r) { return RatFunc(cf_KTConj24_rhs(Family::E, m, r)); }},
    };
    return reg;
}

}  // namespace bindet
