#include "adq/kernel.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <utility>

namespace adq {

namespace {

std::string sides_str(const RadicalSum& l, const RadicalSum& r) {
    return l.str() + " =AD " + r.str();
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    Integer num = gcd(a.num() * b.den(), b.num() * a.den());
    return Rational(num, a.den() * b.den());
}

Rational side_content(const RadicalSum& s, Rational g) {
    for (const auto& [m, c] : s.poly_part().terms()) g = rat_gcd(g, c);
    for (const auto& [coeff, rad] : s.radical_terms())
        for (const auto& [m, c] : coeff.terms()) g = rat_gcd(g, c);
    return g;
}

RadicalSum scale(const RadicalSum& s, const Rational& c) {
    RadicalSum r = s;
    r *= c;
    return r;
}

void record_radicand_assumptions(const RadicalSum& s, DerivationTrace& trace) {
    for (const auto& [coeff, rad] : s.radical_terms())
        trace.assume("radicand " + rad.str() + " assumed nonnegative");
}

}  // namespace

std::string Adequality::str() const {
    return lhs.str() + " =AD " + rhs.str();
}

Adequality adequate(RationalForm lhs, RationalForm rhs, VarId unknown, VarId increment,
                    DerivationTrace& trace) {
    if (unknown == increment) throw Error("unknown and increment must be distinct variables");
    Adequality adq{std::move(lhs), std::move(rhs), unknown, increment};
    trace.append("adequate", adq.lhs.str(), adq.str(),
                 "set the two expressions adequal");
    return adq;
}

Adequality cross_multiply(const Adequality& adq, DerivationTrace& trace) {
    if (adq.lhs.den().has_radicals() || adq.rhs.den().has_radicals())
        throw UnsupportedError("radical denominator unsupported");
    RadicalSum l = adq.lhs.num() * adq.rhs.den();
    RadicalSum r = adq.rhs.num() * adq.lhs.den();
    Adequality out{RationalForm(l), RationalForm(r), adq.unknown, adq.increment};
    trace.append("cross-multiply", adq.str(), out.str(),
                 "multiply both sides by both denominators");
    return out;
}

EliminationResult eliminate_radicals(const Adequality& adq, DerivationTrace& trace) {
    if (!adq.lhs.has_radicals() && !adq.rhs.has_radicals()) return {adq, {}};

    Adequality work = adq;
    if (!work.lhs.den_is_one() || !work.rhs.den_is_one()) work = cross_multiply(work, trace);

    RadicalSum L = work.lhs.num();
    RadicalSum R = work.rhs.num();
    record_radicand_assumptions(L, trace);
    record_radicand_assumptions(R, trace);

    EliminationResult result;
    result.adq.unknown = adq.unknown;
    result.adq.increment = adq.increment;

    while (true) {
        size_t l = L.radical_terms().size();
        size_t r = R.radical_terms().size();
        if (l + r == 0) break;
        if (l < r) {
            std::swap(L, R);
            std::swap(l, r);
            trace.append("rearrange", sides_str(R, L), sides_str(L, R), "swap sides");
        }
        if (l > 2)
            throw UnsupportedError("more than 2 radical terms on one side of the adequality");

        if (l == 2 && r == 2) {
            if (!L.poly_part().is_zero() || !R.poly_part().is_zero())
                throw UnsupportedError(
                    "cannot isolate radicals: two radical terms on each side with "
                    "polynomial remainders");
        } else if (!L.poly_part().is_zero()) {
            // Move the polynomial part over so the radical side squares clean.
            std::string before = sides_str(L, R);
            R -= RadicalSum(L.poly_part());
            L -= RadicalSum(L.poly_part());
            trace.append("isolate", before, sides_str(L, R),
                         "move the polynomial terms to the other side");
        }

        Rational g = side_content(R, side_content(L, Rational(0)));
        if (!g.is_zero() && !g.is_one()) {
            std::string before = sides_str(L, R);
            L = scale(L, g.reciprocal());
            R = scale(R, g.reciprocal());
            trace.append("normalize", before, sides_str(L, R),
                         "divide both sides by " + g.str());
        }

        result.stages.push_back({L, R});
        std::string before = sides_str(L, R);
        RadicalSum L2 = L * L;
        RadicalSum R2 = R * R;
        size_t total_after = L2.radical_terms().size() + R2.radical_terms().size();
        if (total_after >= l + r)
            throw UnsupportedError("radical elimination does not terminate on this input");
        L = std::move(L2);
        R = std::move(R2);
        trace.append("square", before, sides_str(L, R), "square both sides");
    }

    result.stages.push_back({L, R});
    result.adq.lhs = RationalForm(L);
    result.adq.rhs = RationalForm(R);
    return result;
}

Poly cancel_common(const Adequality& adq, DerivationTrace& trace) {
    if (!adq.lhs.is_poly() || !adq.rhs.is_poly())
        throw Error("cancel_common requires polynomial sides");
    Poly d = adq.lhs.num().poly_part() - adq.rhs.num().poly_part();
    std::string note = "cancel the common terms";
    if (!d.is_zero()) {
        bool all_increment = d.coeff_of(adq.increment, 0).is_zero();
        note += all_increment
                    ? std::string("; every remaining term contains ") + adq.increment
                    : std::string("; not every remaining term contains ") + adq.increment +
                          " (recorded)";
    }
    trace.append("cancel", adq.str(), d.str() + " =AD 0", note);
    return d;
}

unsigned lowest_e_power(const Poly& d, VarId increment) {
    if (d.is_zero()) throw Error("degenerate adequality");
    unsigned k = std::numeric_limits<unsigned>::max();
    for (const auto& [m, c] : d.terms()) k = std::min(k, m.degree_in(increment));
    return k;
}

namespace {

std::string e_power_str(VarId increment, unsigned k) {
    std::string s(1, increment);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

Poly divide_by_e(const Poly& d, unsigned k, VarId increment, DerivationTrace& trace) {
    if (k == 0) throw Error("nothing to divide; adequality yields no condition");
    if (k != lowest_e_power(d, increment))
        throw Error("divide_by_e requires the highest common power of " +
                    std::string(1, increment));
    Poly q = d.divide_exact(Poly::variable(increment).pow(k));
    trace.append("divide", d.str(), q.str(), "divide by " + e_power_str(increment, k));
    return q;
}

Poly suppress_e_terms(const Poly& q, VarId increment, DerivationTrace& trace) {
    if (!trace.has_rule("divide"))
        throw Error("suppression rejected: division by the increment necessarily precedes "
                    "the suppression");
    Poly c = q.coeff_of(increment, 0);
    std::string note = c == q ? std::string("no terms contain ") + increment
                              : "suppress the terms still containing " +
                                    std::string(1, increment);
    trace.append("suppress", q.str(), c.str(), note);
    return c;
}

std::string outcome_name(SolveOutcome o) {
    switch (o) {
        case SolveOutcome::solved: return "solved";
        case SolveOutcome::symbolic: return "symbolic";
        case SolveOutcome::vacuous: return "vacuous";
        case SolveOutcome::inconsistent: return "inconsistent";
    }
    return "unknown";
}

std::string root_str(const RationalForm& value) {
    if (value.den_is_one() && value.num().is_poly()) {
        const Poly& p = value.num().poly_part();
        Integer den_lcm = 1;
        for (const auto& [m, c] : p.terms()) den_lcm = den_lcm / gcd(den_lcm, c.den()) * c.den();
        if (den_lcm == 1) return p.str();
        Poly scaled = p * Rational(den_lcm);
        std::string num = scaled.term_count() > 1 ? "(" + scaled.str() + ")" : scaled.str();
        return num + "/" + den_lcm.str();
    }
    return value.str();
}

namespace {

RationalForm make_root(Poly num, Poly den) {
    if (den.is_zero()) throw Error("division by zero");
    // Make the denominator's leading coefficient positive.
    if (den.terms().begin()->second.is_negative()) {
        num = -num;
        den = -den;
    }
    try {
        return RationalForm(num.divide_exact(den));
    } catch (const Error&) {
    }
    Rational common = rat_gcd(num.content(), den.content());
    if (!common.is_zero() && !common.is_one()) {
        num *= common.reciprocal();
        den *= common.reciprocal();
    }
    return RationalForm(RadicalSum(num), RadicalSum(den));
}

// Deterministic presentation order: numeric roots ascending, otherwise
// by rendered text.
bool root_before(const Root& a, const Root& b) {
    const Poly& pa = a.value.num().poly_part();
    const Poly& pb = b.value.num().poly_part();
    if (a.value.den_is_one() && b.value.den_is_one() && pa.is_constant() && pb.is_constant())
        return pa.constant_value() < pb.constant_value();
    return root_str(a.value) < root_str(b.value);
}

}  // namespace

SolveResult solve_condition(const Poly& condition, VarId unknown) {
    SolveResult res;
    res.condition = condition;
    if (condition.is_zero()) {
        res.outcome = SolveOutcome::vacuous;
        return res;
    }
    unsigned deg = condition.degree_in(unknown);
    if (deg == 0) {
        res.outcome = SolveOutcome::inconsistent;
        return res;
    }
    if (deg > 2) {
        res.outcome = SolveOutcome::symbolic;
        return res;
    }
    if (deg == 1) {
        Poly a = condition.coeff_of(unknown, 1);
        Poly b = condition.coeff_of(unknown, 0);
        res.outcome = SolveOutcome::solved;
        res.roots.push_back({make_root(-b, a), 1});
        return res;
    }
    Poly a = condition.coeff_of(unknown, 2);
    Poly b = condition.coeff_of(unknown, 1);
    Poly c = condition.coeff_of(unknown, 0);
    Poly disc = b * b - Rational(4) * (a * c);
    if (disc.is_zero()) {
        res.outcome = SolveOutcome::solved;
        res.roots.push_back({make_root(-b, Rational(2) * a), 2});
        return res;
    }
    auto s = disc.sqrt_exact();
    if (!s) {
        res.outcome = SolveOutcome::symbolic;
        return res;
    }
    res.outcome = SolveOutcome::solved;
    Root r1{make_root(-b - *s, Rational(2) * a), 1};
    Root r2{make_root(-b + *s, Rational(2) * a), 1};
    if (root_before(r2, r1)) std::swap(r1, r2);
    res.roots.push_back(std::move(r1));
    res.roots.push_back(std::move(r2));
    return res;
}

std::string SolveResult::str(VarId unknown) const {
    switch (outcome) {
        case SolveOutcome::solved: {
            std::string s;
            for (size_t i = 0; i < roots.size(); ++i) {
                if (i) s += ", ";
                s += std::string(1, unknown) + " = " + root_str(roots[i].value);
                if (roots[i].multiplicity > 1) s += " (double)";
            }
            return s;
        }
        case SolveOutcome::symbolic:
            return "condition " + condition.str() + " = 0 (symbolic)";
        case SolveOutcome::vacuous:
            return "adequality holds identically (vacuous)";
        case SolveOutcome::inconsistent:
            return "inconsistent condition: " + condition.str() + " = 0";
    }
    return "";
}

ExtremumResult fermat_max_min(const RationalForm& f, VarId unknown, VarId increment) {
    if (unknown == increment) throw Error("unknown and increment must be distinct variables");
    ExtremumResult out;
    DerivationTrace& trace = out.trace;
    trace.assume(std::string("increment ") + increment + " treated as positive (annotation only)");

    RationalForm shifted = f.substitute_increment(unknown, increment);
    trace.append("substitute", f.str(), shifted.str(),
                 std::string("replace ") + unknown + " by " + unknown + " + " + increment);

    Adequality adq = adequate(shifted, f, unknown, increment, trace);

    EliminationResult elim = eliminate_radicals(adq, trace);
    adq = elim.adq;

    if (!adq.lhs.den_is_one() || !adq.rhs.den_is_one()) adq = cross_multiply(adq, trace);

    Poly d = cancel_common(adq, trace);
    if (d.is_zero()) {
        out.outcome = SolveOutcome::vacuous;
        out.condition = Poly();
        out.e_power_divided = 0;
        out.result_text = "adequality holds identically (vacuous)";
        trace.append("solve", "0 =AD 0", out.result_text,
                     "difference vanishes identically; degenerate adequality");
        return out;
    }

    unsigned k = lowest_e_power(d, increment);
    Poly q = divide_by_e(d, k, increment, trace);
    Poly condition = suppress_e_terms(q, increment, trace);

    SolveResult solved = solve_condition(condition, unknown);
    std::string note;
    switch (solved.outcome) {
        case SolveOutcome::solved:
            note = std::string("solve for ") + unknown;
            break;
        case SolveOutcome::symbolic:
            note = condition.degree_in(unknown) > 2
                       ? std::string("degree in ") + unknown + " exceeds 2"
                       : "discriminant is not a perfect square";
            break;
        case SolveOutcome::inconsistent:
            note = std::string("the condition does not involve ") + unknown;
            break;
        case SolveOutcome::vacuous:
            note = "condition vanishes";
            break;
    }
    trace.append("solve", condition.str() + " = 0", solved.str(unknown), note);

    out.outcome = solved.outcome;
    out.condition = condition;
    out.roots = solved.roots;
    out.e_power_divided = k;
    out.result_text = solved.str(unknown);
    return out;
}

ExtremumResult fermat_max_min(const ExprPtr& f, VarId unknown, VarId increment) {
    return fermat_max_min(to_canonical(f), unknown, increment);
}

unsigned double_root_check(const Poly& f, VarId unknown, VarId increment, const Poly& a_star) {
    if (a_star.contains_var(increment))
        throw Error(std::string("candidate contains the increment variable '") + increment + "'");
    Poly shifted = f.substitute(unknown, a_star + Poly::variable(increment));
    Poly base = f.substitute(unknown, a_star);
    Poly diff = shifted - base;
    if (diff.is_zero()) return infinite_multiplicity;
    return lowest_e_power(diff, increment);
}

unsigned double_root_check(const RationalForm& f, VarId unknown, VarId increment,
                           const Poly& a_star) {
    if (!f.is_poly())
        throw UnsupportedError("double-root check requires a polynomial expression");
    return double_root_check(f.num().poly_part(), unknown, increment, a_star);
}

}  // namespace adq
