#pragma once

// Dense univariate polynomials in the indeterminate mu over Rational.
// Coefficients are stored ascending; the zero polynomial is the empty list
// and every nonzero polynomial has a nonzero leading coefficient.

#include "bindet/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace bindet {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {}

    static Poly from_coeffs(std::vector<Rational> coeffs) {
        Poly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // slope*mu + shift
    static Poly affine(const Rational& slope, const Rational& shift) {
        return from_coeffs({shift, slope});
    }

    static Poly mu() { return affine(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& leading() const {
        if (is_zero()) throw std::invalid_argument("Poly::leading: zero polynomial");
        return coeffs_.back();
    }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_value() const { return coeff(0); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        std::vector<Rational> r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
        return from_coeffs(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rational& c) {
        if (c.is_zero()) return Poly();
        std::vector<Rational> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs_[i] * c;
        return from_coeffs(std::move(r));
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }
    friend Poly operator/(const Poly& a, const Rational& c) { return a * c.inverse(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // P(a*mu + b), by Horner in the affine argument.
    Poly compose_affine(const Rational& a, const Rational& b) const {
        Poly arg = affine(a, b);
        Poly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * arg + Poly(coeffs_[i]);
        return acc;
    }

    // Quotient and remainder over the rationals.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw pole_error("Poly::divmod: division by zero polynomial");
        Poly rem = *this;
        std::vector<Rational> q;
        int dd = d.degree();
        if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational(0));
        Rational dlc_inv = d.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= dd) {
            int k = rem.degree() - dd;
            Rational f = rem.leading() * dlc_inv;
            q[static_cast<std::size_t>(k)] = f;
            std::vector<Rational> sub(rem.coeffs_.begin(), rem.coeffs_.end());
            for (int i = 0; i <= dd; ++i)
                sub[static_cast<std::size_t>(k + i)] -= f * d.coeff(static_cast<std::size_t>(i));
            rem = from_coeffs(std::move(sub));
        }
        return {from_coeffs(std::move(q)), rem};
    }

    // Division known to be exact (fraction-free elimination guarantees it).
    Poly divexact(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("Poly::divexact: inexact division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * leading().inverse();
    }

    // Canonical text form: ascending coefficient list, zero as "[0]".
    std::string str() const {
        if (is_zero()) return "[0]";
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeffs_[i].str();
        }
        return s + "]";
    }

    // Human-readable form, highest degree first.
    std::string pretty(const std::string& var = "mu") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (s.empty())
                s += (c.sign() < 0) ? "-" : "";
            else
                s += (c.sign() < 0) ? " - " : " + ";
            bool unit = (a == Rational(1)) && i > 0;
            if (!unit) s += a.str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? Poly() : a.monic();
}

}  // namespace bindet
