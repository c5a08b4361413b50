#pragma once

// Pochhammer symbols (rising factorials) with affine-in-mu bases, the
// generalized binomial coefficient, Pascal-type identities, and the
// first-order epsilon coefficient of binom(x+2e, k+e) for negative k.
//
// The three-case definition implemented by poch():
//   (a)_b = a(a+1)...(a+b-1)   for b > 0,
//   (a)_0 = 1,
//   (a)_b = 1/((a+b)_{-b})     for b < 0.
// Gamma itself is never evaluated; every Gamma ratio in the source formulas
// is reduced to one of these products, which keeps all arithmetic exact.

#include "bindet/rat_func.hpp"

#include <tuple>

namespace bindet {

// value = slope*mu + shift; half-integer shifts such as mu/2 + 3r - 1/2
// are exact Rationals.
struct AffineMu {
    Rational slope;
    Rational shift;

    AffineMu(Rational slope_, Rational shift_) : slope(std::move(slope_)), shift(std::move(shift_)) {}

    AffineMu operator+(const Rational& c) const { return {slope, shift + c}; }
    AffineMu operator+(long c) const { return {slope, shift + Rational(c)}; }
    AffineMu operator-(const Rational& c) const { return {slope, shift - c}; }
    AffineMu operator-(long c) const { return {slope, shift - Rational(c)}; }
    AffineMu operator-() const { return {-slope, -shift}; }

    bool is_constant() const { return slope.is_zero(); }
    Poly to_poly() const { return Poly::affine(slope, shift); }
};

// mu + c
inline AffineMu mu_plus(const Rational& c) { return AffineMu(Rational(1), c); }
inline AffineMu mu_plus(long c) { return mu_plus(Rational(c)); }
// mu/2 + c
inline AffineMu half_mu_plus(const Rational& c) { return AffineMu(Rational(1, 2), c); }
// plain rational base
inline AffineMu const_base(const Rational& c) { return AffineMu(Rational(0), c); }
inline AffineMu const_base(long c) { return const_base(Rational(c)); }

// (base)_len for len >= 0, as a polynomial.
inline Poly poch_rising(const AffineMu& base, long len) {
    if (len < 0) throw std::invalid_argument("poch_rising: negative length");
    Poly acc{Rational(1)};
    for (long k = 0; k < len; ++k) acc *= (base + k).to_poly();
    return acc;
}

// Full three-case Pochhammer symbol.  A negative length whose reciprocal
// product is identically zero (possible only for constant bases) is a pole.
inline RatFunc poch(const AffineMu& base, long len) {
    if (len >= 0) return RatFunc(poch_rising(base, len));
    Poly d = poch_rising(base + len, -len);
    if (d.is_zero()) throw pole_error("poch: negative length hits a pole");
    return RatFunc(Poly(Rational(1)), d);
}

// Rational-argument Pochhammer, for numeric prefactors like (m+r)_{m-r+1}.
inline Rational poch_num(const Rational& base, long len) {
    RatFunc v = poch(const_base(base), len);
    return v.num().constant_value() / v.den().constant_value();
}

inline Rational factorial(long k) { return Rational::factorial(k); }

// Generalized binomial coefficient binom(upper, lower) for integer lower:
// poch(upper-lower+1, lower)/lower! when lower >= 0, and 0 when lower < 0
// (the Gamma(y+1) pole in the gamma-function definition).
inline Poly gbinom(const AffineMu& upper, long lower) {
    if (lower < 0) return Poly();
    return poch_rising(upper - lower + 1, lower) / factorial(lower);
}

inline Rational gbinom_num(const Rational& upper, long lower) {
    if (lower < 0) return Rational(0);
    return poch_num(upper - lower + 1, lower) / factorial(lower);
}

// Coefficient of epsilon in binom(x + 2*eps, k + eps) for integer k <= -1;
// the constant term vanishes.  Equals (-1)^(k+1) * (-k-1)! / (x+1)_{-k}.
inline RatFunc gbinom_eps_first_order(const AffineMu& x, long k) {
    if (k > -1) throw std::invalid_argument("gbinom_eps_first_order: needs k <= -1");
    Rational c = factorial(-k - 1) * Rational(parity_sign(k + 1));
    return RatFunc(Poly(c), poch_rising(x + 1, -k));
}

// The Pascal-step triple (binom(x+1,y), binom(x,y), binom(x,y-1)); the
// identity asserts first - second = third.
inline std::tuple<Poly, Poly, Poly> pascal_step(const AffineMu& x, long y) {
    return {gbinom(x + 1, y), gbinom(x, y), gbinom(x, y - 1)};
}

// sum_{l=0}^{j-1} binom(x+l, y+l); equals binom(x+j, y+j-1) - binom(x, y-1).
inline Poly pascal_sum(const AffineMu& x, long y, long j) {
    if (j < 1) throw std::invalid_argument("pascal_sum: needs j >= 1");
    Poly acc;
    for (long l = 0; l < j; ++l) acc += gbinom(x + l, y + l);
    return acc;
}

}  // namespace bindet
