#include "adq/rational.hpp"

#include "adq/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

namespace adq {

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("division by zero");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_ < 0 ? Integer(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    Integer lhs = num_ * o.den_;
    Integer rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw Error("division by zero");
    return Rational(den_, num_);
}

bool Rational::sqrt_exact(Rational& out) const {
    if (num_ < 0) return false;
    Integer ns = boost::multiprecision::sqrt(num_);
    Integer ds = boost::multiprecision::sqrt(den_);
    if (ns * ns != num_ || ds * ds != den_) return false;
    out = Rational(ns, ds);
    return true;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw Error("invalid rational literal '" + std::string(text) + "'"); };
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') out += text[i++];
        if (i == start) bad();
    };
    std::string whole;
    digits(whole);
    Integer num(whole);
    Integer den(1);
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::string frac;
        digits(frac);
        for (size_t k = 0; k < frac.size(); ++k) den *= 10;
        num = num * den + Integer(frac);
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        std::string d;
        digits(d);
        den = Integer(d);
        if (den == 0) throw Error("division by zero");
    }
    if (i != text.size()) bad();
    if (neg) num = -num;
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace adq
