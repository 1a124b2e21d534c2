#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adq/error.hpp"
#include "adq/expr.hpp"

#include <random>

using adq::canonical_form;
using adq::Poly;
using adq::RadicalSum;
using adq::Rational;
using adq::RationalForm;

namespace {
Poly v(char c) { return Poly::variable(c); }
}

TEST_CASE("polynomial expressions canonicalize") {
    RationalForm f = canonical_form("b*a - a^2");
    CHECK(f.is_poly());
    CHECK(f.num().poly_part() == v('b') * v('a') - v('a') * v('a'));
    CHECK(f.num().poly_part().str() == "-a^2 + a*b");

    CHECK(canonical_form("(a+e)^2").num().poly_part() ==
          v('a').pow(2) + Rational(2) * v('a') * v('e') + v('e').pow(2));

    CHECK(canonical_form("7").num().poly_part() == Poly(7));
    CHECK(canonical_form("1/2").num().poly_part() == Poly(Rational(1, 2)));
    CHECK(canonical_form("1.25").num().poly_part() == Poly(Rational(5, 4)));
    CHECK(canonical_form("-a + a").num().poly_part().is_zero());
}

TEST_CASE("quotients keep numerator and denominator") {
    RationalForm f = canonical_form("y/(y-e)");
    CHECK(f.num().poly_part() == v('y'));
    CHECK(f.den().poly_part() == v('y') - v('e'));
    CHECK_FALSE(f.den_is_one());

    RationalForm g = canonical_form("x^2/p^2");
    CHECK(g.num().poly_part() == v('x').pow(2));
    CHECK(g.den().poly_part() == v('p').pow(2));

    CHECK(canonical_form("a/1").den_is_one());
    CHECK(canonical_form("a/2").num().poly_part() == Rational(1, 2) * v('a'));
}

TEST_CASE("radicals") {
    RationalForm f = canonical_form("sqrt(a+e) + sqrt(a-e)");
    CHECK(f.den_is_one());
    REQUIRE(f.num().radical_terms().size() == 2);
    CHECK(f.num().poly_part().is_zero());

    CHECK(canonical_form("sqrt(4)*a").num().poly_part() == Rational(2) * v('a'));
    CHECK(canonical_form("sqrt(9/4)").num().poly_part() == Poly(Rational(3, 2)));
    CHECK(canonical_form("sqrt(a)*sqrt(a)").num().poly_part() == v('a'));
    CHECK(canonical_form("sqrt(2)").num().radical_terms().size() == 1);
    CHECK(canonical_form("sqrt(a) - sqrt(a)").num().is_zero());

    // like radicals collect
    RationalForm g = canonical_form("3*sqrt(a+1) + sqrt(a+1)");
    REQUIRE(g.num().radical_terms().size() == 1);
    CHECK(g.num().radical_terms()[0].first == Poly(4));
}

TEST_CASE("unsupported shapes") {
    CHECK_THROWS_WITH_AS(canonical_form("sqrt(sqrt(a))"), "nested radicals unsupported",
                         adq::UnsupportedError);
    CHECK_THROWS_AS(canonical_form("sqrt(a)+sqrt(b)+sqrt(m)"), adq::UnsupportedError);
    CHECK_THROWS_AS(canonical_form("sqrt(1+sqrt(b))"), adq::UnsupportedError);
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(canonical_form("a^(1/2)"), adq::ParseError);
    try {
        canonical_form("a^(1/2)");
    } catch (const adq::ParseError& e) {
        CHECK(e.column() == 3);
        CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(canonical_form("a b"), adq::ParseError);
    CHECK_THROWS_AS(canonical_form("ab"), adq::ParseError);
    CHECK_THROWS_AS(canonical_form("2*@"), adq::ParseError);
    CHECK_THROWS_AS(canonical_form(""), adq::ParseError);
    CHECK_THROWS_AS(canonical_form("(a"), adq::ParseError);
    CHECK_THROWS_AS(canonical_form("sqrt a"), adq::ParseError);
    CHECK_THROWS_AS(canonical_form("a^-2"), adq::ParseError);
    try {
        canonical_form("a +\n  @");
    } catch (const adq::ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("division by a vanishing expression") {
    CHECK_THROWS_AS(canonical_form("1/0"), adq::Error);
    CHECK_THROWS_AS(canonical_form("1/(2-2)"), adq::Error);
    CHECK_THROWS_AS(canonical_form("1/(a-a)"), adq::Error);
}

TEST_CASE("print then parse is the identity on canonical forms") {
    const char* inputs[] = {
        "b*a - a^2",
        "(a+e)^2",
        "y/(y-e)",
        "sqrt(a+e) + sqrt(a-e)",
        "2*sqrt(a) - 5",
        "(y+r)^2/(y+r-e)^2",
        "a^3 - 12*a",
        "1/2*b + 1/3",
        "sqrt(2)*a + sqrt(2)",
        "-a^2 + a*b",
    };
    for (const char* s : inputs) {
        RationalForm f = canonical_form(s);
        RationalForm g = canonical_form(f.str());
        CHECK(f == g);
    }
}

TEST_CASE("random polynomials round trip through printing") {
    std::mt19937_64 rng(3141u);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> da(0, 3), db(0, 2), de(0, 2);
    for (int i = 0; i < 300; ++i) {
        Poly p;
        for (int t = 0; t < 4; ++t) {
            adq::Monomial m;
            m = m.with_power('a', da(rng));
            m = m.with_power('b', db(rng));
            m = m.with_power('e', de(rng));
            p += Poly::monomial(Rational(coeff(rng)), m);
        }
        RationalForm f = canonical_form(p.str());
        CHECK(f.is_poly());
        CHECK(f.num().poly_part() == p);
    }
}

TEST_CASE("substitute_increment on forms reaches radicands") {
    RationalForm f = canonical_form("sqrt(a)");
    RationalForm g = f.substitute_increment('a', 'e');
    REQUIRE(g.num().radical_terms().size() == 1);
    CHECK(g.num().radical_terms()[0].second == v('a') + v('e'));
    CHECK_THROWS_AS(canonical_form("sqrt(a+e)").substitute_increment('a', 'e'), adq::Error);

    RationalForm q = canonical_form("y/(y-e)");
    RationalForm qs = q.substitute_increment('y', 'f');
    CHECK(qs.num().poly_part() == v('y') + v('f'));
    CHECK(qs.den().poly_part() == v('y') + v('f') - v('e'));
}

TEST_CASE("numeric evaluation of radical sums") {
    RadicalSum s = canonical_form("sqrt(a+e) + sqrt(a-e)").num();
    double got = s.eval_double({{'a', 4.0}, {'e', 0.0}});
    CHECK(got == doctest::Approx(4.0));
    CHECK_THROWS_AS(s.eval_double({{'a', 0.0}, {'e', 1.0}}), adq::Error);
}
