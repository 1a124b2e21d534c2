#include "adq/radical.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <cmath>

namespace adq {

int compare(const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        int mc = Monomial::compare(ia->first, ib->first);
        if (mc != 0) return mc;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

RadicalSum RadicalSum::radical(Poly coeff, Poly radicand) {
    RadicalSum s;
    s.add_radical(coeff, radicand);
    return s;
}

void RadicalSum::add_radical(const Poly& coeff, const Poly& radicand) {
    if (coeff.is_zero() || radicand.is_zero()) return;
    if (radicand.is_constant()) {
        Rational root(0);
        if (radicand.constant_value().sqrt_exact(root)) {
            poly_ += coeff * root;
            return;
        }
        if (radicand.constant_value().is_negative())
            throw Error("radicand is a negative constant: " + radicand.str());
    }
    auto it = terms_.begin();
    while (it != terms_.end() && compare(it->second, radicand) < 0) ++it;
    if (it != terms_.end() && it->second == radicand) {
        it->first += coeff;
        if (it->first.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {coeff, radicand});
    }
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum r = *this;
    r.poly_ = -r.poly_;
    for (auto& [c, rad] : r.terms_) c = -c;
    return r;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    poly_ += o.poly_;
    for (const auto& [c, rad] : o.terms_) add_radical(c, rad);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
    poly_ -= o.poly_;
    for (const auto& [c, rad] : o.terms_) add_radical(-c, rad);
    return *this;
}

RadicalSum RadicalSum::operator*(const RadicalSum& o) const {
    RadicalSum r;
    r.poly_ = poly_ * o.poly_;
    for (const auto& [c, rad] : o.terms_) r.add_radical(poly_ * c, rad);
    for (const auto& [c, rad] : terms_) r.add_radical(o.poly_ * c, rad);
    for (const auto& [c1, r1] : terms_) {
        for (const auto& [c2, r2] : o.terms_) {
            if (r1 == r2) {
                r.poly_ += c1 * c2 * r1;
            } else {
                r.add_radical(c1 * c2, r1 * r2);
            }
        }
    }
    return r;
}

RadicalSum& RadicalSum::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = RadicalSum();
    poly_ *= c;
    for (auto& [k, rad] : terms_) k *= c;
    return *this;
}

bool RadicalSum::contains_var(VarId v) const {
    if (poly_.contains_var(v)) return true;
    for (const auto& [c, rad] : terms_)
        if (c.contains_var(v) || rad.contains_var(v)) return true;
    return false;
}

std::set<VarId> RadicalSum::variables() const {
    std::set<VarId> vs = poly_.variables();
    for (const auto& [c, rad] : terms_) {
        auto a = c.variables();
        auto b = rad.variables();
        vs.insert(a.begin(), a.end());
        vs.insert(b.begin(), b.end());
    }
    return vs;
}

RadicalSum RadicalSum::substitute_increment(VarId unknown, VarId increment) const {
    if (contains_var(increment))
        throw Error(std::string("increment variable '") + increment +
                    "' already occurs in the expression");
    RadicalSum r(adq::substitute_increment(poly_, unknown, increment));
    for (const auto& [c, rad] : terms_)
        r.add_radical(adq::substitute_increment(c, unknown, increment),
                      adq::substitute_increment(rad, unknown, increment));
    return r;
}

double RadicalSum::eval_double(const std::map<VarId, double>& point) const {
    double total = poly_.eval_double(point);
    for (const auto& [c, rad] : terms_) {
        double r = rad.eval_double(point);
        if (r < 0) throw Error("radicand negative at evaluation point: " + rad.str());
        total += c.eval_double(point) * std::sqrt(r);
    }
    return total;
}

namespace {

// True when p prints as something a '*' or '/' can bind tighter than,
// i.e. a single monomial with positive coefficient.
bool atom_like(const Poly& p) {
    if (p.term_count() != 1) return false;
    return !p.terms().begin()->second.is_negative();
}

std::string radical_term_str(const Poly& coeff, const Poly& rad, bool abs_coeff) {
    Poly c = coeff;
    if (abs_coeff && c.term_count() == 1 && c.terms().begin()->second.is_negative()) c = -c;
    std::string rs = "sqrt(" + rad.str() + ")";
    if (c == Poly(1)) return rs;
    if (atom_like(c)) return c.str() + "*" + rs;
    return "(" + c.str() + ")*" + rs;
}

}  // namespace

std::string RadicalSum::str() const {
    if (terms_.empty()) return poly_.str();
    std::string s;
    if (!poly_.is_zero()) s = poly_.str();
    for (const auto& [c, rad] : terms_) {
        bool neg = c.term_count() == 1 && c.terms().begin()->second.is_negative();
        if (s.empty()) {
            if (neg) s += "-";
            s += radical_term_str(c, rad, true);
        } else {
            s += neg ? " - " : " + ";
            s += radical_term_str(c, rad, true);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const RadicalSum& s) {
    return os << s.str();
}

RationalForm::RationalForm(RadicalSum num, RadicalSum den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("division by zero");
    // Trivial normalization only: constant denominators fold into the
    // numerator, and a common rational cancels nothing else here.
    if (den_.is_poly() && den_.poly_part().is_constant()) {
        Rational c = den_.poly_part().constant_value();
        num_ *= c.reciprocal();
        den_ = RadicalSum(Poly(1));
    }
}

bool RationalForm::den_is_one() const {
    return den_.is_poly() && den_.poly_part() == Poly(1);
}

RationalForm RationalForm::operator+(const RationalForm& o) const {
    if (den_ == o.den_) return RationalForm(num_ + o.num_, den_);
    return RationalForm(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalForm RationalForm::operator-(const RationalForm& o) const {
    if (den_ == o.den_) return RationalForm(num_ - o.num_, den_);
    return RationalForm(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalForm RationalForm::operator*(const RationalForm& o) const {
    return RationalForm(num_ * o.num_, den_ * o.den_);
}

RationalForm RationalForm::operator/(const RationalForm& o) const {
    if (o.num_.is_zero()) throw Error("division by zero");
    return RationalForm(num_ * o.den_, den_ * o.num_);
}

RationalForm RationalForm::operator-() const {
    return RationalForm(-num_, den_);
}

RationalForm RationalForm::pow(unsigned e) const {
    RationalForm r{RadicalSum(Poly(1))};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

RationalForm RationalForm::substitute_increment(VarId unknown, VarId increment) const {
    return RationalForm(num_.substitute_increment(unknown, increment),
                        den_.substitute_increment(unknown, increment));
}

namespace {

bool side_needs_parens(const RadicalSum& s) {
    if (s.has_radicals()) {
        if (!s.poly_part().is_zero() || s.radical_terms().size() > 1) return true;
        return s.radical_terms()[0].first != Poly(1);
    }
    return !atom_like(s.poly_part());
}

std::string side_str(const RadicalSum& s) {
    return side_needs_parens(s) ? "(" + s.str() + ")" : s.str();
}

}  // namespace

std::string RationalForm::str() const {
    if (den_is_one()) return num_.str();
    return side_str(num_) + "/" + side_str(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalForm& f) {
    return os << f.str();
}

}  // namespace adq
