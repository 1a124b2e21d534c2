#pragma once

#include "adq/error.hpp"
#include "adq/poly.hpp"

namespace adq {

/// a + b*eps with eps^2 = 0. T is Rational or Poly; polynomial
/// components let symbolic derivatives in parameters come out exact.
template <typename T>
struct Dual {
    T re{};
    T eps{};

    Dual() = default;
    Dual(T r) : re(std::move(r)) {}
    Dual(T r, T e) : re(std::move(r)), eps(std::move(e)) {}

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.re + y.re, x.eps + y.eps}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.re - y.re, x.eps - y.eps}; }
    Dual operator-() const { return {-re, -eps}; }

    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.re * y.re, x.re * y.eps + x.eps * y.re};
    }

    bool operator==(const Dual&) const = default;

    Dual pow(unsigned n) const {
        Dual r{T(1)};
        Dual base = *this;
        while (n > 0) {
            if (n & 1u) r = r * base;
            base = base * base;
            n >>= 1u;
        }
        return r;
    }
};

/// (a+b eps)/(c+d eps) = a/c + (bc-ad)/c^2 eps, defined when c is
/// invertible. Division by a pure infinitesimal has no result.
inline Dual<Rational> operator/(const Dual<Rational>& x, const Dual<Rational>& y) {
    if (y.re.is_zero()) throw Error("division by pure-infinitesimal dual number");
    Rational inv = y.re.reciprocal();
    return {x.re * inv, (x.eps * y.re - x.re * y.eps) * inv * inv};
}

/// The eps-coefficient of p evaluated at unknown + eps; other variables
/// ride along as exact polynomial components.
inline Poly derivative_via_dual(const Poly& p, VarId unknown) {
    Dual<Poly> acc;
    for (const auto& [mono, coeff] : p.terms()) {
        Dual<Poly> term{Poly(coeff)};
        for (const auto& [v, e] : mono.factors()) {
            Dual<Poly> base = v == unknown
                                  ? Dual<Poly>{Poly::variable(v), Poly(1)}
                                  : Dual<Poly>{Poly::variable(v)};
            term = term * base.pow(e);
        }
        acc = acc + term;
    }
    return acc.eps;
}

}  // namespace adq
