#pragma once

#include "adq/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adq {

/// Variables are single lower-case letters, Viete style: vowels for
/// unknowns, consonants for given magnitudes. The engine never infers a
/// role from the spelling; the unknown and the increment are always named
/// explicitly by the caller.
using VarId = char;

bool is_valid_var(char c);

/// Power product of variables, e.g. a^2*e. Exponents are positive;
/// the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarId v, unsigned exp = 1);

    unsigned degree() const;
    unsigned degree_in(VarId v) const;
    bool is_unit() const { return vars_.empty(); }
    bool contains(VarId v) const { return degree_in(v) > 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires divides(o) == false ... this / o, caller checks o.divides(*this).
    Monomial divide_by(const Monomial& o) const;

    Monomial without(VarId v) const;
    Monomial with_power(VarId v, unsigned exp) const;

    const std::vector<std::pair<VarId, unsigned>>& factors() const { return vars_; }

    bool operator==(const Monomial& o) const = default;

    /// Graded lexicographic: total degree first, then exponent vectors
    /// compared alphabetically ('a' most significant).
    static int compare(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<VarId, unsigned>> vars_;  // sorted by variable
};

/// Map order that puts the graded-lex largest monomial first, so that
/// Poly prints and iterates leading term first. The order is fixed once
/// and for all: traces must be byte-reproducible.
struct MonomialDescendingOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// Sparse multivariate polynomial over Rational. Zero coefficients are
/// never stored; equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescendingOrder>;

    Poly() = default;
    Poly(long long c) : Poly(Rational(c)) {}
    Poly(const Rational& c);
    static Poly variable(VarId v);
    static Poly monomial(Rational coeff, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value when is_constant(); zero polynomial gives 0.
    Rational constant_value() const;

    unsigned total_degree() const;
    unsigned degree_in(VarId v) const;
    bool contains_var(VarId v) const;
    std::set<VarId> variables() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const = default;

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Poly coeff_of(VarId v, unsigned k) const;
    /// All (degree, coefficient) pairs in v with nonzero coefficient,
    /// degrees strictly increasing.
    std::vector<std::pair<unsigned, Poly>> collect_powers(VarId v) const;

    /// Ring homomorphism v -> value, other variables untouched.
    Poly substitute(VarId v, const Poly& value) const;

    Rational eval(const std::map<VarId, Rational>& point) const;
    double eval_double(const std::map<VarId, double>& point) const;

    /// Positive rational c such that (1/c) * this has coprime integer
    /// coefficients. Zero polynomial gives 1.
    Rational content() const;

    /// Exact quotient this / d; throws Error when the division leaves a
    /// remainder (graded-lex leading-term elimination).
    Poly divide_exact(const Poly& d) const;

    /// Exact polynomial square root, when one exists.
    std::optional<Poly> sqrt_exact() const;

    /// Canonical print: graded-lex descending, e.g. "-2*a + b - e".
    /// Reparses under the expression grammar to the same polynomial.
    std::string str() const;

private:
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
    friend class RadicalSum;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// f(unknown) -> f(unknown + increment), fully expanded.
/// Throws Error when the increment variable already occurs in p.
Poly substitute_increment(const Poly& p, VarId unknown, VarId increment);

/// Decomposition p = sum coeff_k * increment^k, degrees strictly increasing.
std::vector<std::pair<unsigned, Poly>> collect_e_powers(const Poly& p, VarId increment);

}  // namespace adq
