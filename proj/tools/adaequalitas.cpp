#include "adq/applications.hpp"
#include "adq/diophantus.hpp"
#include "adq/dual.hpp"
#include "adq/error.hpp"
#include "adq/kernel.hpp"
#include "adq/tlh.hpp"
#include "adq/trace_io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace adq;

constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;

struct OutputOptions {
    std::string format = "text";
    std::string out_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Trace format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_file, "Write the trace to a file instead of stdout");
}

int emit(const TraceDocument& doc, const OutputOptions& opts) {
    std::string rendered =
        render(doc, opts.format == "machine" ? TraceFormat::machine : TraceFormat::text);
    if (opts.out_file.empty()) {
        std::cout << rendered;
        return kExitSolved;
    }
    std::ofstream out(opts.out_file, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << opts.out_file << "\n";
        return kExitInputError;
    }
    out << rendered;
    return kExitSolved;
}

int finish(TraceDocument doc, const std::string& outcome, const OutputOptions& opts,
           int exit_code) {
    doc.outcome = outcome;
    int emit_code = emit(doc, opts);
    return emit_code == kExitSolved ? exit_code : emit_code;
}

/// "pi", "pi/2", "2*pi/3", "3/4*pi" or plain decimal radians.
CycloidPoint parse_theta(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        size_t used = 0;
        double value = std::stod(s, &used);
        if (used != s.size()) throw Error("cannot parse angle '" + text + "'");
        return CycloidPoint::from_radians(value);
    }
    std::string before = s.substr(0, pos);   // "", "2*", "3/4*"
    std::string after = s.substr(pos + 2);   // "", "/3"
    Rational multiple(1);
    if (!before.empty()) {
        if (before.back() != '*') throw Error("cannot parse angle '" + text + "'");
        multiple = Rational::parse(before.substr(0, before.size() - 1));
    }
    if (!after.empty()) {
        if (after.front() != '/') throw Error("cannot parse angle '" + text + "'");
        multiple = multiple / Rational::parse(after.substr(1));
    }
    return CycloidPoint::from_pi_multiple(multiple);
}

int run_maxmin(const std::string& expr_text, char unknown, char increment,
               const OutputOptions& opts) {
    ExtremumResult result = fermat_max_min(parse_expr(expr_text), unknown, increment);
    TraceDocument doc = TraceDocument::from_trace("maxmin", expr_text, result.trace);
    doc.results.push_back(result.result_text);
    return finish(std::move(doc), outcome_name(result.outcome), opts,
                  result.outcome == SolveOutcome::solved ? kExitSolved : kExitDegenerate);
}

int run_tangent_parabola(const std::optional<std::string>& at, const OutputOptions& opts) {
    ParabolaPoint pt;
    if (at) pt.y = Rational::parse(*at);
    ParabolaTangentResult result = parabola_subtangent(pt);
    std::string input = "parabola x^2 = y, tangency ordinate " + (at ? *at : "y");
    TraceDocument doc = TraceDocument::from_trace("tangent-parabola", input, result.trace);
    doc.results.push_back(result.result_text);
    return finish(std::move(doc), "solved", opts, kExitSolved);
}

int run_cycloid(const std::string& theta_text, const OutputOptions& opts) {
    CycloidPoint pt = parse_theta(theta_text);
    CycloidTangentResult result = cycloid_tangent_slope(pt);
    TraceDocument doc =
        TraceDocument::from_trace("cycloid", "theta = " + theta_text, result.trace);
    if (result.exact_slope) {
        doc.results.push_back("slope = " + result.exact_slope->str() + " (exact)");
    } else {
        std::ostringstream os;
        os.precision(17);
        os << "slope = " << result.slope;
        doc.results.push_back(os.str());
    }
    return finish(std::move(doc), "solved", opts, kExitSolved);
}

int run_dioph(const std::string& sum_text, unsigned count,
              const std::optional<std::string>& greater,
              const std::optional<std::string>& less, unsigned den_bound, unsigned max_den,
              const OutputOptions& opts) {
    if (greater.has_value() == less.has_value())
        throw Error("exactly one of --each-greater-than / --each-less-than is required");

    SquaresProblem problem;
    problem.N = Rational::parse(sum_text);
    problem.k = count;
    problem.kind = greater ? SquaresProblem::Bound::greater_than
                           : SquaresProblem::Bound::less_than;
    problem.bound = Rational::parse(greater ? *greater : *less);
    problem.validate();

    Rational b = target_fraction(problem.N, problem.k, den_bound);
    std::vector<Rational> prelim = preliminary_decomposition(problem.N, problem.k, max_den);
    ParisotesSolution sol = parisotes_solve(problem, b, prelim);
    VerificationReport report = verify_solution(sol.sides, problem);

    const std::string bound_word = greater ? "greater than" : "less than";
    TraceDocument doc;
    doc.method = "dioph";
    doc.input = "split " + problem.N.str() + " into " + std::to_string(count) +
                " squares, each " + bound_word + " " + problem.bound.str();

    Rational target = problem.N / Rational(static_cast<long long>(problem.k));
    std::string prelim_text;
    for (const Rational& a : prelim)
        prelim_text += (prelim_text.empty() ? "" : ", ") + a.str();
    doc.steps.push_back({"target", "N/k = " + target.str(), "b = " + b.str(),
                         "closest square with denominator at most " +
                             std::to_string(den_bound)});
    doc.steps.push_back({"preliminary", problem.N.str(), prelim_text,
                         "integer-square split, zeros allowed"});
    doc.steps.push_back({"parisotes", "sum of (a_i + t*(b - a_i))^2 = " + problem.N.str(),
                         "t0 = " + sol.t0.str(), "the nonzero root; t = 0 is discarded"});

    std::string sides_text;
    for (const Rational& side : sol.sides)
        sides_text += (sides_text.empty() ? "" : ", ") + side.str();
    doc.steps.push_back(
        {"solve", "sides a_i + t0*(b - a_i)", sides_text, "exact sum restored"});

    for (size_t i = 0; i < sol.sides.size(); ++i) {
        const Rational& side = sol.sides[i];
        doc.results.push_back("side " + std::to_string(i + 1) + " = " + side.str() +
                              " (square " + (side * side).str() + ")");
    }
    doc.results.push_back("sum of squares = " + report.sum.str());
    doc.results.push_back(std::string("verification: ") +
                          (report.pass() ? "pass" : "bound violated") + " (every square " +
                          bound_word + " " + problem.bound.str() + ")");
    return finish(std::move(doc), report.pass() ? "solved" : "bound violated", opts,
                  report.pass() ? kExitSolved : kExitDegenerate);
}

int run_snell(double h1, double h2, double d, double v1, double v2,
              const OutputOptions& opts) {
    RefractionScene scene{h1, h2, d, v1, v2};
    SnellResult result = snell_condition(scene);
    std::ostringstream input;
    input.precision(17);
    input << "h1 = " << h1 << ", h2 = " << h2 << ", d = " << d << ", v1 = " << v1
          << ", v2 = " << v2;
    TraceDocument doc = TraceDocument::from_trace("snell", input.str(), result.trace);

    std::ostringstream os;
    os.precision(17);
    os << "x* = " << result.x_star;
    doc.results.push_back(os.str());
    os.str("");
    os << "sin(theta1) = " << result.sin1 << ", sin(theta2) = " << result.sin2;
    doc.results.push_back(os.str());
    doc.results.push_back(result.law_text);
    return finish(std::move(doc), "solved", opts, kExitSolved);
}

int run_tlh(const std::string& expr_text, const OutputOptions& opts) {
    GradedSum reduced = tlh_reduce(parse_graded(expr_text));
    TraceDocument doc;
    doc.method = "tlh";
    doc.input = expr_text;
    doc.steps.push_back({"reduce", expr_text, reduced.str(),
                         "keep only the terms of lowest differential grade"});
    doc.results.push_back(reduced.str());
    return finish(std::move(doc), "solved", opts, kExitSolved);
}

int run_dual(const std::string& expr_text, char unknown, const OutputOptions& opts) {
    RationalForm form = canonical_form(expr_text);
    if (!form.is_poly())
        throw Error("dual-number differentiation needs a polynomial expression");
    Poly derivative = derivative_via_dual(form.num().poly_part(), unknown);
    TraceDocument doc;
    doc.method = "dual";
    doc.input = expr_text;
    doc.steps.push_back({"expand", expr_text + " at " + std::string(1, unknown) + " + eps",
                         derivative.str(), "coefficient of eps; eps^2 = 0"});
    doc.results.push_back("d/d" + std::string(1, unknown) + " = " + derivative.str());
    return finish(std::move(doc), "solved", opts, kExitSolved);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for Fermat's method of adequality"};
    app.require_subcommand(1);

    OutputOptions opts;

    std::string maxmin_expr;
    std::string unknown = "a", increment = "e";
    CLI::App* maxmin = app.add_subcommand("maxmin", "Extremize an expression");
    maxmin->add_option("expr", maxmin_expr, "Expression in the unknown")->required();
    maxmin->add_option("--unknown", unknown, "Unknown variable")->capture_default_str();
    maxmin->add_option("--increment", increment, "Increment variable")
        ->capture_default_str();
    add_output_flags(maxmin, opts);

    std::optional<std::string> parabola_at;
    CLI::App* parabola =
        app.add_subcommand("tangent-parabola", "Subtangent of the parabola x^2 = y");
    parabola->add_option("--at", parabola_at, "Tangency ordinate (symbolic when omitted)");
    add_output_flags(parabola, opts);

    std::string theta;
    CLI::App* cycloid = app.add_subcommand("cycloid", "Tangent slope of the unit cycloid");
    cycloid->add_option("--theta", theta, "Angle: pi/2, 2*pi/3, or decimal radians")
        ->required();
    add_output_flags(cycloid, opts);

    std::string dioph_sum;
    unsigned dioph_count = 2, den_bound = 10, max_den = 12;
    std::optional<std::string> dioph_greater, dioph_less;
    CLI::App* dioph = app.add_subcommand("dioph", "Split a number into bounded squares");
    dioph->add_option("--sum", dioph_sum, "Number to split")->required();
    dioph->add_option("--count", dioph_count, "How many squares (2 or 3)")->required();
    dioph->add_option("--each-greater-than", dioph_greater, "Lower bound on every square");
    dioph->add_option("--each-less-than", dioph_less, "Upper bound on every square");
    dioph->add_option("--den-bound", den_bound, "Denominator bound for the target search")
        ->capture_default_str();
    dioph->add_option("--max-den", max_den, "Denominator bound for the preliminary")
        ->capture_default_str();
    add_output_flags(dioph, opts);

    double h1 = 1.0, h2 = 1.0, d = 2.0, v1 = 1.0, v2 = 1.0;
    CLI::App* snell = app.add_subcommand("snell", "Least-time refraction point");
    snell->add_option("--h1", h1, "Source height")->capture_default_str();
    snell->add_option("--h2", h2, "Target depth")->capture_default_str();
    snell->add_option("--d", d, "Horizontal separation")->capture_default_str();
    snell->add_option("--v1", v1, "Speed above")->capture_default_str();
    snell->add_option("--v2", v2, "Speed below")->capture_default_str();
    add_output_flags(snell, opts);

    std::string tlh_expr;
    CLI::App* tlh = app.add_subcommand("tlh", "Reduce a sum of differentials");
    tlh->add_option("expr", tlh_expr, "Expression such as 'a + dx'")->required();
    add_output_flags(tlh, opts);

    std::string dual_expr;
    std::string dual_unknown = "a";
    CLI::App* dual = app.add_subcommand("dual", "Differentiate via dual numbers");
    dual->add_option("expr", dual_expr, "Polynomial expression")->required();
    dual->add_option("--unknown", dual_unknown, "Differentiation variable")
        ->capture_default_str();
    add_output_flags(dual, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (maxmin->parsed()) {
            if (unknown.size() != 1 || increment.size() != 1)
                throw Error("variables are single letters");
            return run_maxmin(maxmin_expr, unknown[0], increment[0], opts);
        }
        if (parabola->parsed()) return run_tangent_parabola(parabola_at, opts);
        if (cycloid->parsed()) return run_cycloid(theta, opts);
        if (dioph->parsed())
            return run_dioph(dioph_sum, dioph_count, dioph_greater, dioph_less, den_bound,
                             max_den, opts);
        if (snell->parsed()) return run_snell(h1, h2, d, v1, v2, opts);
        if (tlh->parsed()) return run_tlh(tlh_expr, opts);
        if (dual->parsed()) {
            if (dual_unknown.size() != 1) throw Error("variables are single letters");
            return run_dual(dual_expr, dual_unknown[0], opts);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
                  << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        return what.find("degenerate") != std::string::npos ? kExitDegenerate
                                                            : kExitInputError;
    }
    return kExitUsage;
}
