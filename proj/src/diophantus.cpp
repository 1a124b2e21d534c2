#include "adq/diophantus.hpp"

#include "adq/error.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace adq {
namespace {

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

Rational abs_rat(const Rational& r) { return r < Rational(0) ? -r : r; }

// Best coprime numerator for denominator q: the largest coprime p with
// p^2 <= T*q^2 and the smallest coprime p with p^2 > T*q^2 bracket the
// optimum; |p^2 - T*q^2| is monotone on each side. Returns (diff, b).
std::optional<std::pair<Rational, Rational>> best_for_denominator(const Rational& T,
                                                                  unsigned q) {
    const Integer qi(q);
    const Integer floor_Tq2 = (T.num() * qi * qi) / T.den();
    const Integer s = isqrt(floor_Tq2);

    std::optional<std::pair<Rational, Rational>> best;
    auto consider = [&](const Integer& p) {
        if (p < 1 || gcd(p, qi) != 1) return;
        Rational b(p, qi);
        Rational diff = abs_rat(b * b - T);
        if (!best || diff < best->first) best = {diff, b};
    };

    Integer lo = s;
    while (lo >= 1 && gcd(lo, qi) != 1) --lo;
    consider(lo);

    Integer hi = s + 1;
    while (gcd(hi, qi) != 1) ++hi;
    consider(hi);

    return best;
}

Rational reduce_candidates(
    const std::vector<std::optional<std::pair<Rational, Rational>>>& per_q) {
    std::optional<std::pair<Rational, Rational>> best;
    for (const auto& cand : per_q) {
        if (!cand) continue;
        if (!best || cand->first < best->first) best = cand;
    }
    return best->second;
}

void check_search_inputs(const Rational& N, unsigned k, unsigned den_bound) {
    if (!(N > Rational(0))) throw Error("target of the squares problem must be positive");
    if (k != 2 && k != 3) throw Error("only sums of two or three squares are supported");
    if (den_bound < 1) throw Error("denominator bound must be at least 1");
}

bool descending_squares(const Integer& M, unsigned count, const Integer& max_value,
                        std::vector<Integer>& out) {
    if (count == 0) return M == 0;
    Integer m = isqrt(M);
    if (m > max_value) m = max_value;
    for (; m >= 0; --m) {
        out.push_back(m);
        if (descending_squares(M - m * m, count - 1, m, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

void SquaresProblem::validate() const {
    check_search_inputs(N, k, 1);
    Rational kb = Rational(static_cast<long long>(k)) * bound;
    if (kind == Bound::greater_than && !(kb < N))
        throw Error("bound too large: k times the bound must stay below the target");
    if (kind == Bound::less_than && !(kb > N))
        throw Error("bound too small: k times the bound must exceed the target");
}

bool SquaresProblem::square_ok(const Rational& square) const {
    return kind == Bound::greater_than ? square > bound : square < bound;
}

Rational target_fraction_serial(const Rational& N, unsigned k, unsigned den_bound) {
    check_search_inputs(N, k, den_bound);
    const Rational T = N / Rational(static_cast<long long>(k));
    std::vector<std::optional<std::pair<Rational, Rational>>> per_q(den_bound);
    for (unsigned q = 1; q <= den_bound; ++q) per_q[q - 1] = best_for_denominator(T, q);
    return reduce_candidates(per_q);
}

Rational target_fraction(const Rational& N, unsigned k, unsigned den_bound) {
    check_search_inputs(N, k, den_bound);
    const Rational T = N / Rational(static_cast<long long>(k));
    std::vector<std::optional<std::pair<Rational, Rational>>> per_q(den_bound);
    // Each slot is written by exactly one iteration; the reduction is a
    // separate ordered pass, so the result is schedule-independent.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (unsigned q = 1; q <= den_bound; ++q) per_q[q - 1] = best_for_denominator(T, q);
    return reduce_candidates(per_q);
}

std::vector<Rational> preliminary_decomposition(const Rational& N, unsigned k,
                                                unsigned max_den) {
    check_search_inputs(N, k, 1);
    for (unsigned q = 1; q <= max_den; ++q) {
        const Integer qi(q);
        Integer scaled_num = N.num() * qi * qi;
        if (scaled_num % N.den() != 0) continue;
        Integer M = scaled_num / N.den();
        std::vector<Integer> numerators;
        if (!descending_squares(M, k, isqrt(M), numerators)) continue;
        std::vector<Rational> result;
        result.reserve(k);
        for (const Integer& m : numerators) result.emplace_back(m, qi);
        return result;
    }
    throw Error("no preliminary decomposition found; supply one explicitly");
}

ParisotesSolution parisotes_solve_with_directions(const SquaresProblem& problem,
                                                  const std::vector<Rational>& prelim,
                                                  const std::vector<Rational>& directions,
                                                  const Rational& b) {
    problem.validate();
    if (prelim.size() != problem.k)
        throw Error("preliminary decomposition has the wrong number of entries");
    if (directions.size() != problem.k)
        throw Error("one perturbation direction per preliminary entry is required");

    Rational sum_sq;
    for (const Rational& a : prelim) sum_sq += a * a;
    if (sum_sq != problem.N)
        throw Error("preliminary squares do not sum to the target");

    Rational S1, S2;
    for (unsigned i = 0; i < problem.k; ++i) {
        S1 += prelim[i] * directions[i];
        S2 += directions[i] * directions[i];
    }
    if (S2 == Rational(0))
        throw Error("degenerate perturbation: every direction is zero");
    if (S1 == Rational(0))
        throw Error("degenerate perturbation: only the discarded root t = 0 remains");

    ParisotesSolution sol;
    sol.b = b;
    sol.t0 = Rational(-2) * S1 / S2;

    Rational check;
    sol.sides.reserve(problem.k);
    for (unsigned i = 0; i < problem.k; ++i) {
        Rational side = prelim[i] + sol.t0 * directions[i];
        check += side * side;
        sol.sides.push_back(std::move(side));
    }
    if (check != problem.N)
        throw Error("internal error: perturbed squares do not sum to the target");

    sol.bound_ok = true;
    for (const Rational& side : sol.sides) {
        bool ok = problem.square_ok(side * side);
        sol.side_ok.push_back(ok);
        sol.bound_ok = sol.bound_ok && ok;
    }
    return sol;
}

ParisotesSolution parisotes_solve(const SquaresProblem& problem, const Rational& b,
                                  const std::vector<Rational>& prelim) {
    std::vector<Rational> directions;
    directions.reserve(prelim.size());
    for (const Rational& a : prelim) directions.push_back(b - a);
    return parisotes_solve_with_directions(problem, prelim, directions, b);
}

VerificationReport verify_solution(const std::vector<Rational>& sides,
                                   const SquaresProblem& problem) {
    VerificationReport report;
    for (const Rational& side : sides) {
        Rational square = side * side;
        report.sum += square;
        report.side_ok.push_back(problem.square_ok(square));
    }
    report.sum_ok = (report.sum == problem.N && sides.size() == problem.k);
    return report;
}

bool VerificationReport::pass() const {
    if (!sum_ok) return false;
    return std::all_of(side_ok.begin(), side_ok.end(), [](bool ok) { return ok; });
}

ParisotesSolution solve_squares_problem(const SquaresProblem& problem, unsigned den_bound,
                                        unsigned max_den) {
    problem.validate();
    Rational b = target_fraction(problem.N, problem.k, den_bound);
    std::vector<Rational> prelim = preliminary_decomposition(problem.N, problem.k, max_den);
    return parisotes_solve(problem, b, prelim);
}

}  // namespace adq
