#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace adq {

/// Arbitrary-precision signed integer (sign-magnitude limbs).
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
///
/// Structural equality coincides with value equality, so Rational can be
/// used directly as a map key and compared in tests without helpers.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    /// Exact square root if this is a perfect square of a rational.
    bool sqrt_exact(Rational& out) const;

    double to_double() const;

    /// Canonical decimal form: "3", "-812/711". Lossless round trip
    /// with parse().
    std::string str() const;

    /// Parses "3", "-812/711", "1.25" (decimal point is exact: 5/4).
    static Rational parse(std::string_view text);

private:
    Integer num_;
    Integer den_;  // > 0

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// gcd of the numerators over lcm-free content use; helper shared by Poly.
Integer gcd(const Integer& a, const Integer& b);

}  // namespace adq
