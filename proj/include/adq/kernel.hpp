#pragma once

#include "adq/expr.hpp"
#include "adq/radical.hpp"
#include "adq/trace.hpp"

#include <limits>
#include <string>
#include <vector>

namespace adq {

/// lhs =AD rhs with the two designated roles. The increment is the
/// auxiliary variation; it is suppressed after division, never set to
/// zero.
struct Adequality {
    RationalForm lhs;
    RationalForm rhs;
    VarId unknown;
    VarId increment;

    std::string str() const;
};

Adequality adequate(RationalForm lhs, RationalForm rhs, VarId unknown, VarId increment,
                    DerivationTrace& trace);

/// num_L*den_R =AD num_R*den_L. Radicals may appear in numerators;
/// radical denominators are unsupported.
Adequality cross_multiply(const Adequality& adq, DerivationTrace& trace);

/// Sides of the adequality at the points an elimination squaring was
/// applied; retained so soundness can be spot-checked numerically.
struct EliminationStage {
    RadicalSum lhs;
    RadicalSum rhs;
};

struct EliminationResult {
    Adequality adq;
    std::vector<EliminationStage> stages;  // state before each squaring, plus final
};

/// Repeated isolate-and-square until both sides are polynomial. At most
/// two radical terms per side; the total radical term count strictly
/// decreases with every squaring. Radicand nonnegativity is recorded as
/// a trace assumption.
EliminationResult eliminate_radicals(const Adequality& adq, DerivationTrace& trace);

/// Difference lhs - rhs of a polynomial adequality, expanded. Whether
/// every surviving term carries the increment is checked and recorded
/// in the trace note (informative, not fatal).
Poly cancel_common(const Adequality& adq, DerivationTrace& trace);

/// Largest k such that increment^k divides every term. Throws
/// "degenerate adequality" for the zero polynomial.
unsigned lowest_e_power(const Poly& d, VarId increment);

/// Exact division by increment^k; appends the "divide" step. k must be
/// at least 1: k = 0 means the adequality yields no condition.
Poly divide_by_e(const Poly& d, unsigned k, VarId increment, DerivationTrace& trace);

/// Deletes every term still containing the increment; appends the
/// "suppress" step. Requires a prior "divide" step in the trace:
/// division necessarily precedes the suppression.
Poly suppress_e_terms(const Poly& q, VarId increment, DerivationTrace& trace);

enum class SolveOutcome { solved, symbolic, vacuous, inconsistent };

std::string outcome_name(SolveOutcome o);

/// A root of the condition, as an exact quotient of polynomials in the
/// parameters (a plain rational in the numeric case).
struct Root {
    RationalForm value;
    unsigned multiplicity = 1;

    bool operator==(const Root&) const = default;
};

std::string root_str(const RationalForm& value);

struct SolveResult {
    SolveOutcome outcome = SolveOutcome::symbolic;
    std::vector<Root> roots;   // nonempty only when solved
    Poly condition;

    /// "a = b/2" / "a = -2, a = 2" / "condition ... (symbolic)" / ...
    std::string str(VarId unknown) const;
};

/// Exact roots for degree <= 2 in the unknown when the discriminant is
/// a perfect square; "symbolic" otherwise. Zero condition is vacuous, a
/// condition free of the unknown is inconsistent.
SolveResult solve_condition(const Poly& condition, VarId unknown);

struct ExtremumResult {
    SolveOutcome outcome = SolveOutcome::symbolic;
    Poly condition;            // polynomial in unknown and parameters
    std::vector<Root> roots;
    unsigned e_power_divided = 0;  // 0 only for the vacuous outcome
    DerivationTrace trace;
    std::string result_text;
};

/// The full six-step derivation: form f(a+e), set adequal, eliminate
/// radicals / cross-multiply as needed, cancel, divide by the highest
/// common power of e, suppress, solve.
ExtremumResult fermat_max_min(const RationalForm& f, VarId unknown, VarId increment);
ExtremumResult fermat_max_min(const ExprPtr& f, VarId unknown, VarId increment);

constexpr unsigned infinite_multiplicity = std::numeric_limits<unsigned>::max();

/// Multiplicity of increment = 0 as a root of f(a* + e) - f(a*), by
/// exact expansion; infinite_multiplicity when the difference vanishes
/// identically.
unsigned double_root_check(const Poly& f, VarId unknown, VarId increment, const Poly& a_star);
unsigned double_root_check(const RationalForm& f, VarId unknown, VarId increment,
                           const Poly& a_star);

}  // namespace adq
