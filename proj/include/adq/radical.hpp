#pragma once

#include "adq/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace adq {

/// Total order on polynomials (graded-lex on terms, then coefficients);
/// used to keep radical term lists in a reproducible order.
int compare(const Poly& a, const Poly& b);

/// Polynomial plus a sum of coeff*sqrt(radicand) terms. Radicands are
/// pairwise distinct, nonzero and never constant perfect squares (those
/// fold into the polynomial part). Like radicals combine on insertion;
/// sqrt(R)*sqrt(R) folds back to R. The engine treats radicands as
/// formally nonnegative; that assumption is recorded in derivation
/// traces, not checked here.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(Poly p) : poly_(std::move(p)) {}
    RadicalSum(const Rational& c) : poly_(c) {}

    static RadicalSum radical(Poly coeff, Poly radicand);

    const Poly& poly_part() const { return poly_; }
    const std::vector<std::pair<Poly, Poly>>& radical_terms() const { return terms_; }
    bool has_radicals() const { return !terms_.empty(); }
    bool is_zero() const { return poly_.is_zero() && terms_.empty(); }
    bool is_poly() const { return terms_.empty(); }

    /// Adds coeff*sqrt(radicand), folding square constants and merging
    /// with an existing like radicand.
    void add_radical(const Poly& coeff, const Poly& radicand);

    RadicalSum operator-() const;
    RadicalSum& operator+=(const RadicalSum& o);
    RadicalSum& operator-=(const RadicalSum& o);
    RadicalSum operator*(const RadicalSum& o) const;
    RadicalSum& operator*=(const Rational& c);

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }

    bool operator==(const RadicalSum& o) const = default;

    bool contains_var(VarId v) const;
    std::set<VarId> variables() const;

    /// f(unknown) -> f(unknown + increment) in every component,
    /// radicands included.
    RadicalSum substitute_increment(VarId unknown, VarId increment) const;

    /// Numeric evaluation; throws Error when a radicand comes out
    /// negative at the point.
    double eval_double(const std::map<VarId, double>& point) const;

    std::string str() const;

private:
    Poly poly_;
    std::vector<std::pair<Poly, Poly>> terms_;  // (coeff, radicand), sorted by radicand
};

std::ostream& operator<<(std::ostream& os, const RadicalSum& s);

/// Quotient of two radical sums; denominator 1 for plain expressions.
class RationalForm {
public:
    RationalForm() : num_(Poly()), den_(Poly(1)) {}
    RationalForm(RadicalSum num) : num_(std::move(num)), den_(Poly(1)) {}
    RationalForm(Poly num) : num_(std::move(num)), den_(Poly(1)) {}
    RationalForm(RadicalSum num, RadicalSum den);

    const RadicalSum& num() const { return num_; }
    const RadicalSum& den() const { return den_; }
    bool is_poly() const { return den_is_one() && num_.is_poly(); }
    bool den_is_one() const;
    bool has_radicals() const { return num_.has_radicals() || den_.has_radicals(); }

    RationalForm operator+(const RationalForm& o) const;
    RationalForm operator-(const RationalForm& o) const;
    RationalForm operator*(const RationalForm& o) const;
    RationalForm operator/(const RationalForm& o) const;
    RationalForm operator-() const;
    RationalForm pow(unsigned e) const;

    bool operator==(const RationalForm& o) const = default;

    RationalForm substitute_increment(VarId unknown, VarId increment) const;

    std::string str() const;

private:
    RadicalSum num_;
    RadicalSum den_;
};

std::ostream& operator<<(std::ostream& os, const RationalForm& f);

}  // namespace adq
