#include "adq/trace_io.hpp"

#include <json.hpp>

#include <sstream>

namespace adq {

TraceDocument TraceDocument::from_trace(std::string method, std::string input,
                                        const DerivationTrace& trace) {
    TraceDocument doc;
    doc.method = std::move(method);
    doc.input = std::move(input);
    doc.steps = trace.steps();
    doc.assumptions = trace.assumptions();
    return doc;
}

std::string to_text(const TraceDocument& doc) {
    std::ostringstream os;
    os << "method: " << doc.method << "\n";
    os << "input: " << doc.input << "\n";
    if (!doc.steps.empty()) {
        os << "steps:\n";
        size_t i = 0;
        for (const TraceStep& step : doc.steps) {
            os << "  " << ++i << ". [" << step.rule << "] " << step.before << "  ->  "
               << step.after << "\n";
            if (!step.note.empty()) os << "     " << step.note << "\n";
        }
    }
    if (!doc.assumptions.empty()) {
        os << "assumptions:\n";
        for (const std::string& a : doc.assumptions) os << "  - " << a << "\n";
    }
    if (!doc.results.empty()) {
        os << "result:\n";
        for (const std::string& r : doc.results) os << "  " << r << "\n";
    }
    os << "outcome: " << doc.outcome << "\n";
    return os.str();
}

std::string to_machine(const TraceDocument& doc) {
    // nlohmann::json objects keep keys sorted, so every line is
    // deterministic for fixed content.
    using nlohmann::json;
    std::ostringstream os;
    os << json{{"trace_version", 1}, {"method", doc.method}, {"input", doc.input}}.dump()
       << "\n";
    size_t i = 0;
    for (const TraceStep& step : doc.steps) {
        os << json{{"step", ++i},
                   {"rule", step.rule},
                   {"before", step.before},
                   {"after", step.after},
                   {"note", step.note}}
                  .dump()
           << "\n";
    }
    os << json{{"assumptions", doc.assumptions},
               {"results", doc.results},
               {"outcome", doc.outcome}}
              .dump()
       << "\n";
    return os.str();
}

std::string render(const TraceDocument& doc, TraceFormat format) {
    return format == TraceFormat::machine ? to_machine(doc) : to_text(doc);
}

}  // namespace adq
