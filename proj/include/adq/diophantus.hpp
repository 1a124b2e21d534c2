#pragma once

#include "adq/rational.hpp"

#include <vector>

namespace adq {

/// Express N as a sum of k rational squares, each square above (or
/// below) a stated bound.
struct SquaresProblem {
    enum class Bound { greater_than, less_than };

    Rational N;
    unsigned k = 2;  // 2 or 3
    Bound kind = Bound::greater_than;
    Rational bound;

    /// N > 0, k in {2,3}, and k*bound on the correct side of N.
    void validate() const;
    bool square_ok(const Rational& square) const;
};

/// Positive rational b with reduced denominator <= den_bound minimizing
/// |b^2 - N/k|; ties prefer the smaller denominator, then the smaller
/// numerator. Exhaustive scan, exact comparisons.
Rational target_fraction(const Rational& N, unsigned k, unsigned den_bound = 10);

/// Same contract, single-threaded reference implementation.
Rational target_fraction_serial(const Rational& N, unsigned k, unsigned den_bound = 10);

/// First decomposition N = sum of k rational squares found scanning
/// common denominators 1..max_den with numerators descending; zeros
/// allowed. Throws when none exists in range.
std::vector<Rational> preliminary_decomposition(const Rational& N, unsigned k,
                                                unsigned max_den = 12);

struct ParisotesSolution {
    std::vector<Rational> sides;  // a_i + t0*c_i
    Rational t0;
    Rational b;
    std::vector<bool> side_ok;    // per-side bound satisfaction
    bool bound_ok = false;        // all sides within bound (reported, not enforced)
};

/// Perturb the preliminary toward b: with c_i = b - a_i, the nonzero
/// root of sum (a_i + t*c_i)^2 = N is t0 = -2*sum(a_i*c_i)/sum(c_i^2)
/// (t = 0 is always discarded). The returned sides satisfy
/// sum sides^2 = N exactly; bound violations are reported via flags.
ParisotesSolution parisotes_solve(const SquaresProblem& problem, const Rational& b,
                                  const std::vector<Rational>& prelim);

/// Same recipe with explicit perturbation directions; scaling every
/// direction by lambda scales t0 by 1/lambda and leaves sides unchanged.
ParisotesSolution parisotes_solve_with_directions(const SquaresProblem& problem,
                                                  const std::vector<Rational>& prelim,
                                                  const std::vector<Rational>& directions,
                                                  const Rational& b);

struct VerificationReport {
    Rational sum;
    bool sum_ok = false;
    std::vector<bool> side_ok;

    bool pass() const;
};

/// Exact check of sum-of-squares and the per-square bound.
VerificationReport verify_solution(const std::vector<Rational>& sides,
                                   const SquaresProblem& problem);

/// target_fraction + preliminary_decomposition + parisotes_solve with
/// the default search parameters.
ParisotesSolution solve_squares_problem(const SquaresProblem& problem, unsigned den_bound = 10,
                                        unsigned max_den = 12);

}  // namespace adq
