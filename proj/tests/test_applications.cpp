#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adq/applications.hpp"
#include "adq/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace adq;

namespace {

Poly var(char c) { return Poly::variable(c); }

// y = slope*(x - 2) + 4 as a zero set, i.e. a line through (2, 4).
Poly line_through_2_4(const Rational& slope) {
    return var('y') - var('x') * slope + Poly(Rational(2) * slope - Rational(4));
}

Poly parabola_curve() { return var('x') * var('x') - var('y'); }

}  // namespace

TEST_CASE("parabola subtangent, symbolic ordinate") {
    ParabolaTangentResult res = parabola_subtangent(ParabolaPoint{});
    CHECK(res.r == RationalForm(var('y')));
    CHECK(res.subtangent == RationalForm(Rational(2) * var('y')));
    CHECK(res.result_text == "r = y, a = 2*y");
    REQUIRE(res.solve.roots.size() == 2);

    CHECK(res.trace.has_rule("adequate"));
    CHECK(res.trace.has_rule("substitute"));
    CHECK(res.trace.has_rule("cross-multiply"));
    CHECK(res.trace.has_rule("divide"));
    CHECK(res.trace.has_rule("suppress"));

    bool grid_checked = false, outside = false;
    for (const std::string& s : res.trace.assumptions()) {
        grid_checked = grid_checked || s.find("grid") != std::string::npos;
        outside = outside || s.find("p^2 > y - e") != std::string::npos;
    }
    CHECK(grid_checked);
    CHECK(outside);
}

TEST_CASE("parabola subtangent, numeric ordinates") {
    ParabolaTangentResult at4 = parabola_subtangent(ParabolaPoint{Rational(4)});
    CHECK(at4.r == RationalForm(Poly(Rational(4))));
    CHECK(at4.result_text == "r = 4, a = 8");

    ParabolaTangentResult at1 = parabola_subtangent(ParabolaPoint{Rational(1)});
    CHECK(at1.r == RationalForm(Poly(Rational(1))));

    CHECK_THROWS_AS(parabola_subtangent(ParabolaPoint{Rational(0)}), Error);
    CHECK_THROWS_AS(parabola_subtangent(ParabolaPoint{Rational(-3)}), Error);
}

TEST_CASE("derived tangent line touches to second order at five points") {
    // Tangency abscissa x0 rational: the subtangent answer r = x0^2 puts
    // the axis crossing at -x0^2, so the line has slope 2*x0.
    for (const Rational& x0 :
         {Rational(1), Rational(2), Rational(3, 2), Rational(5), Rational(-3)}) {
        Rational y0 = x0 * x0;
        ParabolaTangentResult res = parabola_subtangent(ParabolaPoint{y0});
        CHECK(res.r == RationalForm(Poly(y0)));

        Poly tangent = var('y') - var('x') * (Rational(2) * x0) + Poly(y0);
        CHECK(order_of_contact(parabola_curve(), tangent) == 2);
    }
}

TEST_CASE("order of contact pins") {
    CHECK(order_of_contact(parabola_curve(), line_through_2_4(Rational(4))) == 2);
    CHECK(order_of_contact(parabola_curve(), line_through_2_4(Rational(3))) == 1);
    CHECK(order_of_contact(parabola_curve(), var('y') + Poly(1)) == 0);

    // y^2 - x^2 contains the line y - x entirely.
    Poly cross = var('y') * var('y') - var('x') * var('x');
    CHECK(order_of_contact(cross, var('y') - var('x')) == infinite_multiplicity);

    CHECK_THROWS_AS(order_of_contact(parabola_curve(), var('x') - Poly(2)),
                    UnsupportedError);
    CHECK_THROWS_AS(order_of_contact(parabola_curve(), var('x') * var('y')), Error);
    CHECK_THROWS_AS(order_of_contact(parabola_curve(), Poly(5)), Error);
}

TEST_CASE("tangent separates from twenty random secants") {
    std::mt19937_64 rng(20260814u);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    int checked = 0;
    while (checked < 20) {
        Rational slope(num(rng), den(rng));
        if (slope == Rational(4)) continue;  // that one is the tangent
        CHECK(order_of_contact(parabola_curve(), line_through_2_4(slope)) == 1);
        ++checked;
    }
    CHECK(order_of_contact(parabola_curve(), line_through_2_4(Rational(4))) == 2);
}

TEST_CASE("cycloid slope at pinned angles") {
    // (cos t - 1)/sin t == -tan(t/2); the half-angle form is the oracle.
    for (const auto& [mul_num, mul_den] :
         {std::pair{1, 6}, {1, 3}, {1, 2}, {2, 3}, {5, 6}}) {
        CycloidPoint pt = CycloidPoint::from_pi_multiple(Rational(mul_num, mul_den));
        CycloidTangentResult res = cycloid_tangent_slope(pt);
        double expected = -std::tan(pt.theta / 2.0);
        CHECK(std::abs(res.slope - expected) <= 1e-10);
    }

    CycloidTangentResult quarter =
        cycloid_tangent_slope(CycloidPoint::from_pi_multiple(Rational(1, 2)));
    REQUIRE(quarter.exact_slope.has_value());
    CHECK(*quarter.exact_slope == Rational(-1));
    CHECK(quarter.slope == -1.0);

    CycloidTangentResult two_thirds =
        cycloid_tangent_slope(CycloidPoint::from_pi_multiple(Rational(2, 3)));
    CHECK(std::abs(two_thirds.slope - (-std::sqrt(3.0))) <= 1e-12);
    CHECK_FALSE(two_thirds.exact_slope.has_value());

    // Exactness needs the rational pi-multiple form of the angle.
    CycloidTangentResult near_quarter =
        cycloid_tangent_slope(CycloidPoint::from_radians(std::numbers::pi / 2));
    CHECK_FALSE(near_quarter.exact_slope.has_value());
    CHECK(std::abs(near_quarter.slope + 1.0) <= 1e-12);
}

TEST_CASE("cycloid trace records the two adequation substitutions") {
    CycloidTangentResult res =
        cycloid_tangent_slope(CycloidPoint::from_pi_multiple(Rational(1, 3)));
    REQUIRE(res.trace.steps().size() >= 2);
    CHECK(res.trace.steps()[0].rule == "adequate");
    CHECK(res.trace.steps()[0].after == "OE + arc(CO)");
    CHECK(res.trace.steps()[1].rule == "substitute");
    CHECK(res.trace.steps()[1].after == "EV + MV");
}

TEST_CASE("cycloid degenerate angles") {
    CHECK_THROWS_WITH_AS(cycloid_tangent_slope(CycloidPoint::from_pi_multiple(Rational(0))),
                         "tangent construction degenerate", Error);
    CHECK_THROWS_WITH_AS(cycloid_tangent_slope(CycloidPoint::from_pi_multiple(Rational(1))),
                         "tangent construction degenerate", Error);
    CHECK_THROWS_AS(cycloid_tangent_slope(CycloidPoint::from_radians(0.0)), Error);
    CHECK_THROWS_AS(cycloid_tangent_slope(CycloidPoint::from_radians(std::numbers::pi)),
                    Error);
    CHECK_THROWS_AS(cycloid_tangent_slope(CycloidPoint::from_radians(3.5)), Error);
}

TEST_CASE("cycloid slope against the parametric derivative") {
    // x = t - sin t, y = 1 - cos t gives dy/dx = sin t/(1 - cos t); the
    // axis-relative slope is its negative reciprocal.
    for (int i = 1; i <= 10; ++i) {
        double t = 0.3 * i;
        CycloidTangentResult res = cycloid_tangent_slope(CycloidPoint::from_radians(t));
        double dydx = std::sin(t) / (1.0 - std::cos(t));
        CHECK(std::abs(res.slope * dydx + 1.0) <= 1e-10);
    }
}

TEST_CASE("refraction, symbolic condition") {
    RefractionScene scene;  // defaults are a valid scene
    SnellResult res = snell_condition(scene);

    CHECK(res.solve.outcome == SolveOutcome::solved);
    REQUIRE(res.solve.roots.size() == 1);
    CHECK(res.solve.roots[0].value == RationalForm(var('m')));
    CHECK(res.solve.str('a') == "a = m");

    // The suppressed condition is a constant multiple of
    // 2*m*b^2*n^2*(m + b)*(a - m).
    Poly base = Rational(2) * var('m') * var('b') * var('b') * var('n') * var('n') *
                (var('m') + var('b')) * (var('a') - var('m'));
    Poly ratio = res.condition.divide_exact(base);
    CHECK(ratio.is_constant());
    CHECK(ratio.constant_value() != Rational(0));

    CHECK(res.trace.has_rule("square"));
    CHECK(res.trace.has_rule("divide"));
    CHECK(res.trace.has_rule("suppress"));
    bool dictionary = false;
    for (const std::string& s : res.trace.assumptions())
        dictionary = dictionary || s.find("sin(theta1)") != std::string::npos;
    CHECK(dictionary);
    CHECK(res.law_text == "sin(theta1)/v1 = sin(theta2)/v2");
}

TEST_CASE("refraction, pinned scenes") {
    RefractionScene slow_below{1.0, 1.0, 2.0, 1.0, 0.5};
    SnellResult res = snell_condition(slow_below);
    CHECK(res.x_star > 0.0);
    CHECK(res.x_star < slow_below.d);
    CHECK(std::abs(res.sin1 / res.sin2 - 2.0) <= 1e-9);
    CHECK(std::abs(res.x_star - least_time_oracle(slow_below)) <= 1e-8);

    RefractionScene fast_above{3.0, 1.0, 4.0, 2.0, 1.0};
    SnellResult res2 = snell_condition(fast_above);
    CHECK(std::abs(res2.sin1 / res2.sin2 - 2.0) <= 1e-9);
    CHECK(std::abs(res2.x_star - least_time_oracle(fast_above)) <= 1e-8);

    CHECK(std::abs(res.residual(res.x_star)) <= 1e-12);
    CHECK(res.residual(res.x_star / 2) < 0.0);
    CHECK(res.residual((res.x_star + slow_below.d) / 2) > 0.0);
}

TEST_CASE("refraction, symmetric scene crosses in the middle") {
    RefractionScene symmetric{5.0, 5.0, 3.0, 7.0, 7.0};
    SnellResult res = snell_condition(symmetric);
    CHECK(res.x_star == 1.5);  // the first bisection midpoint is an exact zero
    CHECK(least_time_oracle(symmetric) == 1.5);
}

TEST_CASE("refraction, straight line when the speeds match") {
    RefractionScene even{2.0, 6.0, 4.0, 3.0, 3.0};
    CHECK(least_time_oracle(even) == 1.0);  // d*h1/(h1 + h2)
    SnellResult res = snell_condition(even);
    CHECK(std::abs(res.x_star - 1.0) <= 1e-12);
}

TEST_CASE("refraction, random scenes against the least-time oracle") {
    std::mt19937_64 rng(4242u);
    std::uniform_real_distribution<double> height(0.3, 5.0);
    std::uniform_real_distribution<double> width(0.5, 8.0);
    std::uniform_real_distribution<double> speed(0.2, 4.0);
    for (int i = 0; i < 25; ++i) {
        RefractionScene scene{height(rng), height(rng), width(rng), speed(rng), speed(rng)};
        SnellResult res = snell_condition(scene);
        double oracle = least_time_oracle(scene);
        CHECK(std::abs(res.x_star - oracle) <= 1e-8);
        CHECK(std::abs(res.sin1 / res.sin2 - scene.v1 / scene.v2) <= 1e-9);

        double back = scene.d - oracle;
        double s1 = oracle / std::sqrt(scene.h1 * scene.h1 + oracle * oracle);
        double s2 = back / std::sqrt(scene.h2 * scene.h2 + back * back);
        CHECK(std::abs(s1 / s2 - scene.v1 / scene.v2) <= 1e-9);
    }
}

TEST_CASE("refraction scene validation") {
    CHECK_THROWS_AS(snell_condition(RefractionScene{-1.0, 1.0, 1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(snell_condition(RefractionScene{1.0, 1.0, 0.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(least_time_oracle(RefractionScene{1.0, 1.0, 1.0, 0.0, 1.0}), Error);
}
