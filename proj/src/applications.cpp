#include "adq/applications.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace adq {
namespace {

Rational eval_form(const RationalForm& f, const std::map<VarId, Rational>& point) {
    if (f.has_radicals()) throw Error("expected a radical-free value");
    Rational den = f.den().poly_part().eval(point);
    return f.num().poly_part().eval(point) / den;
}

std::string double_str(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

void ParabolaPoint::validate() const {
    if (y && !(*y > Rational(0))) throw Error("parabola ordinate must be positive");
}

ParabolaTangentResult parabola_subtangent(const ParabolaPoint& pt) {
    pt.validate();

    ParabolaTangentResult out;
    DerivationTrace& trace = out.trace;
    trace.assume("ordinate y treated as positive");
    trace.assume("off the touch point the tangent lies outside the parabola: p^2 > y - e");

    const Poly y = pt.y ? Poly(*pt.y) : Poly::variable('y');
    const Poly r = Poly::variable('r');
    const Poly e = Poly::variable('e');

    // Squared-ordinate comparison between the curve point and the point
    // of the tangent line above y - e.
    RationalForm ordinates(Poly::variable('x').pow(2), Poly::variable('p').pow(2));
    RationalForm abscissas(RadicalSum(y), RadicalSum(y - e));
    Adequality raw = adequate(ordinates, abscissas, 'r', 'e', trace);

    const Poly yr = y + r;
    Adequality adq{RationalForm((yr * yr), ((yr - e) * (yr - e))), abscissas, 'r', 'e'};
    trace.append("substitute", raw.str(), adq.str(),
                 "similar triangles along the axis: x/p = (y + r)/(y + r - e), squared");

    adq = cross_multiply(adq, trace);
    Poly diff = cancel_common(adq, trace);
    unsigned k = lowest_e_power(diff, adq.increment);
    Poly quotient = divide_by_e(diff, k, adq.increment, trace);
    Poly condition = suppress_e_terms(quotient, adq.increment, trace);

    out.solve = solve_condition(condition, 'r');
    if (out.solve.outcome != SolveOutcome::solved)
        throw Error("parabola condition did not solve: " + out.solve.str('r'));

    const std::map<VarId, Rational> probe = {{'y', pt.y ? *pt.y : Rational(1)}};
    const Root* positive = nullptr;
    for (const Root& root : out.solve.roots)
        if (eval_form(root.value, probe) > Rational(0)) positive = &root;
    if (!positive) throw Error("parabola condition has no positive root");

    out.r = positive->value;
    out.subtangent = out.r * RationalForm(Poly(Rational(2)));
    trace.append("solve", condition.str() + " = 0", out.solve.str('r'),
                 "keep the positive root; the subtangent is a = 2*r");

    // Exact spot-check of the inequality behind the adequality: at the
    // derived tangent, p^2 = y*((y + r - e)/(y + r))^2 exceeds y - e for
    // every e != 0 in the grid.
    std::vector<Rational> y_samples;
    if (pt.y)
        y_samples.push_back(*pt.y);
    else
        y_samples = {Rational(1, 2), Rational(1), Rational(2), Rational(7, 2)};
    const std::vector<Rational> e_samples = {Rational(1, 8), Rational(1, 4), Rational(1, 2),
                                             Rational(1), Rational(3, 2)};
    for (const Rational& yv : y_samples) {
        Rational rv = eval_form(out.r, {{'y', yv}});
        for (const Rational& ev : e_samples) {
            Rational ratio = (yv + rv - ev) / (yv + rv);
            Rational p_sq = yv * ratio * ratio;
            if (!(p_sq > yv - ev))
                throw Error("tangent inequality failed at a grid point");
        }
    }
    trace.assume("checked: p^2 > y - e at every grid sample (exact arithmetic)");

    out.result_text = "r = " + root_str(out.r) + ", a = " + root_str(out.subtangent);
    return out;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n_in) {
    Integer n = n_in < 0 ? Integer(-n_in) : n_in;
    if (n > Integer(1000000000000LL))
        throw UnsupportedError("coefficients too large for the rational-root search");
    std::vector<Integer> divs;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        divs.push_back(i);
        if (i * i != n) divs.push_back(n / i);
    }
    return divs;
}

unsigned multiplicity_at(Poly p, const Rational& root) {
    const Poly factor = Poly::variable('x') - Poly(root);
    unsigned count = 0;
    while (!p.is_constant() && p.eval({{'x', root}}) == Rational(0)) {
        p = p.divide_exact(factor);
        ++count;
    }
    return count;
}

}  // namespace

unsigned order_of_contact(const Poly& curve, const Poly& line) {
    if (line.total_degree() != 1) throw Error("contact line must have degree exactly 1");
    for (VarId v : line.variables())
        if (v != 'x' && v != 'y') throw Error("contact line must involve only x and y");
    for (VarId v : curve.variables())
        if (v != 'x' && v != 'y') throw Error("contact curve must involve only x and y");

    Poly y_coeff = line.coeff_of('y', 1);
    if (y_coeff.is_zero())
        throw UnsupportedError("vertical line: not supported in this parametrization");
    Poly rest = line - Poly::variable('y') * y_coeff.constant_value();
    Poly y_expr = rest * (Rational(-1) / y_coeff.constant_value());

    Poly p = curve.substitute('y', y_expr);
    if (p.is_zero()) return infinite_multiplicity;
    if (p.is_constant()) return 0;

    // Strip the root at x = 0, then try every rational-root candidate of
    // the integer-coefficient remainder.
    auto powers = p.collect_powers('x');
    unsigned best = powers.front().first;
    Poly q = Poly();
    for (const auto& [deg, coeff] : powers)
        q += Poly::monomial(Rational(1), Monomial('x', deg - powers.front().first)) * coeff;
    q *= Rational(1) / q.content();

    const Integer lead = q.coeff_of('x', q.degree_in('x')).constant_value().num();
    const Integer tail = q.coeff_of('x', 0).constant_value().num();
    for (const Integer& num : positive_divisors(tail)) {
        for (const Integer& den : positive_divisors(lead)) {
            for (int sign : {1, -1}) {
                Rational candidate(sign * num, den);
                best = std::max(best, multiplicity_at(q, candidate));
            }
        }
    }
    return best;
}

CycloidPoint CycloidPoint::from_pi_multiple(const Rational& multiple) {
    CycloidPoint pt;
    pt.pi_multiple = multiple;
    pt.theta = multiple.to_double() * std::numbers::pi;
    return pt;
}

CycloidPoint CycloidPoint::from_radians(double radians) {
    CycloidPoint pt;
    pt.theta = radians;
    return pt;
}

void CycloidPoint::validate() const {
    bool in_range = pi_multiple
                        ? (*pi_multiple > Rational(0) && *pi_multiple < Rational(1))
                        : (theta > 0.0 && theta < std::numbers::pi);
    if (!in_range) throw Error("tangent construction degenerate");
}

CycloidTangentResult cycloid_tangent_slope(const CycloidPoint& pt) {
    pt.validate();

    CycloidTangentResult out;
    DerivationTrace& trace = out.trace;
    trace.assume("the arc enters as a symbol only; no rational approximation of arc length");
    trace.append("adequate", "NE", "OE + arc(CO)",
                 "the cycloid ordinate is adequal to the circle ordinate plus the arc");
    trace.append("substitute", "OE + arc(CO)", "EV + MV",
                 "tangent ordinate EV for the circle ordinate OE, tangent chunk MV for arc MO");

    std::string at = pt.pi_multiple ? "theta = (" + pt.pi_multiple->str() + ")*pi"
                                    : "theta = " + double_str(pt.theta) + " rad";
    trace.append("solve", "slope", "cos(theta)/sin(theta) - 1/sin(theta)", at);

    if (pt.pi_multiple && *pt.pi_multiple == Rational(1, 2)) {
        // cos and sin are both rational only here: (0 - 1)/1
        out.exact_slope = Rational(-1);
        out.slope = -1.0;
        return out;
    }
    out.slope = (std::cos(pt.theta) - 1.0) / std::sin(pt.theta);
    return out;
}

void RefractionScene::validate() const {
    if (!(h1 > 0.0) || !(h2 > 0.0) || !(d > 0.0) || !(v1 > 0.0) || !(v2 > 0.0))
        throw Error("refraction scene parameters must all be positive");
}

SnellResult snell_condition(const RefractionScene& scene) {
    scene.validate();

    SnellResult out;
    DerivationTrace& trace = out.trace;

    const Poly a = Poly::variable('a');
    const Poly b = Poly::variable('b');
    const Poly m = Poly::variable('m');
    const Poly n = Poly::variable('n');
    const Poly e = Poly::variable('e');

    RadicalSum lhs = RadicalSum::radical(Poly(1), m * m * n * n + m * m * e * e -
                                                      Rational(2) * m * m * b * e);
    lhs += RadicalSum::radical(Poly(1), b * b * n * n + b * b * e * e +
                                            Rational(2) * b * b * a * e);
    RadicalSum rhs(m * n + b * n);

    Adequality adq = adequate(RationalForm(lhs), RationalForm(rhs), 'a', 'e', trace);
    EliminationResult elim = eliminate_radicals(adq, trace);
    Poly diff = cancel_common(elim.adq, trace);
    unsigned k = lowest_e_power(diff, 'e');
    Poly quotient = divide_by_e(diff, k, 'e', trace);
    out.condition = suppress_e_terms(quotient, 'e', trace);

    out.solve = solve_condition(out.condition, 'a');
    trace.append("solve", out.condition.str() + " = 0", out.solve.str('a'),
                 "stationarity of the travel time across the interface");
    trace.assume("dictionary: n = 1, b = sin(theta1), m = (v2/v1)*sin(theta1), a = sin(theta2)");
    out.law_text = "sin(theta1)/v1 = sin(theta2)/v2";

    out.residual = [scene](double x) {
        double back = scene.d - x;
        double s1 = x / std::sqrt(scene.h1 * scene.h1 + x * x);
        double s2 = back / std::sqrt(scene.h2 * scene.h2 + back * back);
        return s1 / scene.v1 - s2 / scene.v2;
    };

    // The residual is strictly increasing with opposite signs at the
    // ends, so plain bisection converges; an exact zero returns at once
    // (the symmetric scene lands on d/2 immediately).
    double lo = 0.0, hi = scene.d;
    if (!(out.residual(lo) < 0.0) || !(out.residual(hi) > 0.0))
        throw Error("no crossing point in (0, d)");
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * scene.d; ++i) {
        double rm = out.residual(x);
        if (rm == 0.0) break;
        (rm < 0.0 ? lo : hi) = x;
        x = 0.5 * (lo + hi);
    }
    out.x_star = x;
    out.sin1 = x / std::sqrt(scene.h1 * scene.h1 + x * x);
    double back = scene.d - x;
    out.sin2 = back / std::sqrt(scene.h2 * scene.h2 + back * back);
    return out;
}

double least_time_oracle(const RefractionScene& scene) {
    scene.validate();
    // Equal speeds: the least-time path is the straight line.
    if (scene.v1 == scene.v2) return scene.d * scene.h1 / (scene.h1 + scene.h2);

    auto time = [&scene](double x) {
        double back = scene.d - x;
        return std::sqrt(scene.h1 * scene.h1 + x * x) / scene.v1 +
               std::sqrt(scene.h2 * scene.h2 + back * back) / scene.v2;
    };

    const int kSamples = 4096;
    std::vector<double> sampled(kSamples + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i <= kSamples; ++i)
        sampled[i] = time(scene.d * i / kSamples);
    int coarse = 0;
    for (int i = 1; i <= kSamples; ++i)
        if (sampled[i] < sampled[coarse]) coarse = i;

    double lo = scene.d * std::max(0, coarse - 1) / kSamples;
    double hi = scene.d * std::min(kSamples, coarse + 1) / kSamples;

    const double shrink = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - shrink * (hi - lo);
    double x2 = lo + shrink * (hi - lo);
    double f1 = time(x1), f2 = time(x2);
    while (hi - lo > 1e-12 * std::max(1.0, scene.d)) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - shrink * (hi - lo);
            f1 = time(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + shrink * (hi - lo);
            f2 = time(x2);
        }
    }

    // Golden-section comparisons go quiet near a smooth minimum, so
    // polish with a sign bisection of the time derivative on a bracket
    // slightly wider than the golden interval.
    auto slope = [&scene](double x) {
        double back = scene.d - x;
        return x / (scene.v1 * std::sqrt(scene.h1 * scene.h1 + x * x)) -
               back / (scene.v2 * std::sqrt(scene.h2 * scene.h2 + back * back));
    };
    double pad = 1e-6 * scene.d;
    double blo = std::max(0.0, lo - pad), bhi = std::min(scene.d, hi + pad);
    if (!(slope(blo) < 0.0 && slope(bhi) > 0.0)) {
        blo = 0.0;
        bhi = scene.d;
    }
    for (int i = 0; i < 200 && bhi - blo > 1e-15 * scene.d; ++i) {
        double mid = 0.5 * (blo + bhi);
        double s = slope(mid);
        if (s == 0.0) return mid;
        (s < 0.0 ? blo : bhi) = mid;
    }
    return 0.5 * (blo + bhi);
}

}  // namespace adq
