#pragma once

// Normalized rational functions in mu: denominator monic and nonzero,
// gcd(numerator, denominator) = 1.  The zero value is 0/1.

#include "bindet/poly.hpp"

#include <string>
#include <utility>

namespace bindet {

class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}

    RatFunc(Poly num, Poly den) {
        if (den.is_zero()) throw pole_error("RatFunc: zero denominator");
        num_ = std::move(num);
        den_ = std::move(den);
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(Rational(1)); }

    const Poly& as_poly() const {
        if (!is_polynomial()) throw std::logic_error("RatFunc::as_poly: value is not a polynomial");
        return num_;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw pole_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw pole_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw pole_error("RatFunc::eval: pole at evaluation point");
        return num_.eval(x) / d;
    }

    RatFunc compose_affine(const Rational& a, const Rational& b) const {
        return RatFunc(num_.compose_affine(a, b), den_.compose_affine(a, b));
    }

    // Canonical text form: "num / den" with the polynomial list forms.
    std::string str() const { return num_.str() + " / " + den_.str(); }

    std::string pretty(const std::string& var = "mu") const {
        if (is_polynomial()) return num_.pretty(var);
        return "(" + num_.pretty(var) + ") / (" + den_.pretty(var) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        Rational lc = den_.leading();
        if (lc != Rational(1)) {
            num_ = num_ * lc.inverse();
            den_ = den_ * lc.inverse();
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace bindet
