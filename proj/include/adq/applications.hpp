#pragma once

#include "adq/kernel.hpp"

#include <functional>
#include <optional>

namespace adq {

/// Tangency point on the parabola x^2 = y. Without a value the
/// derivation runs with y as a symbol.
struct ParabolaPoint {
    std::optional<Rational> y;

    void validate() const;  // y > 0 when given
};

struct ParabolaTangentResult {
    RationalForm r;           // vertex-to-axis-intersection distance; equals y
    RationalForm subtangent;  // 2r, measured along the axis
    SolveResult solve;
    DerivationTrace trace;
    std::string result_text;
};

/// Tangent to x^2 = y through the squared-ordinate adequality
/// x^2/p^2 =AD y/(y - e) and the similar-triangles substitution
/// x/p = (y + r)/(y + r - e); the kernel pipeline yields r = y. The
/// tangent-outside-the-curve inequality p^2 > y - e is checked on an
/// exact sample grid and recorded in the trace.
ParabolaTangentResult parabola_subtangent(const ParabolaPoint& pt);

/// Multiplicity of the deepest intersection of a curve f(x, y) = 0 with
/// a line (degree-1 polynomial, not vertical): substitute the line's y
/// into the curve and count the repeated rational root. 0 when no
/// rational intersection exists; infinite_multiplicity when the line
/// lies inside the curve.
unsigned order_of_contact(const Poly& curve, const Poly& line);

/// Point on the unit cycloid x = theta - sin(theta), y = 1 - cos(theta).
struct CycloidPoint {
    std::optional<Rational> pi_multiple;  // theta as a rational multiple of pi
    double theta = 0.0;                   // radians, always populated

    static CycloidPoint from_pi_multiple(const Rational& multiple);
    static CycloidPoint from_radians(double radians);

    void validate() const;  // 0 < theta < pi
};

struct CycloidTangentResult {
    double slope;                         // (cos(theta) - 1)/sin(theta)
    std::optional<Rational> exact_slope;  // only where cos and sin are both rational
    DerivationTrace trace;
};

/// Tangent slope of the cycloid relative to the axis of symmetry. The
/// curve is not algebraic, so the derivation is the pair of adequation
/// substitutions (ordinate for ordinate, tangent segment for arc),
/// recorded in the trace; the slope itself is cos(theta)/sin(theta)
/// minus 1/sin(theta).
CycloidTangentResult cycloid_tangent_slope(const CycloidPoint& pt);

/// Flat interface between two media: source h1 above, target h2 below,
/// horizontal separation d, speeds v1 and v2.
struct RefractionScene {
    double h1 = 1.0;
    double h2 = 1.0;
    double d = 1.0;
    double v1 = 1.0;
    double v2 = 1.0;

    void validate() const;  // all positive
};

struct SnellResult {
    double x_star = 0.0;  // crossing point, measured from the source's foot
    std::function<double(double)> residual;  // derivative of travel time
    double sin1 = 0.0;    // sine of the incidence angle at x_star
    double sin2 = 0.0;    // sine of the refraction angle at x_star
    Poly condition;       // suppressed symbolic condition in a, b, m, n
    SolveResult solve;    // a = m
    DerivationTrace trace;
    std::string law_text;
};

/// Least-time refraction: adequate
///   sqrt(m^2 n^2 + m^2 e^2 - 2 m^2 b e) + sqrt(b^2 n^2 + b^2 e^2 + 2 b^2 a e)
///     =AD m n + b n,
/// eliminate the radicals and run the kernel; the condition factors
/// through a - m. Numerically the stationarity residual is bisected on
/// (0, d) for the scene's crossing point.
SnellResult snell_condition(const RefractionScene& scene);

/// Independent minimizer of T(x) = sqrt(h1^2 + x^2)/v1
/// + sqrt(h2^2 + (d - x)^2)/v2: coarse scan, golden-section refinement,
/// then a derivative-sign bisection polish. No symbolic machinery.
double least_time_oracle(const RefractionScene& scene);

}  // namespace adq
