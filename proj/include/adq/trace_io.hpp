#pragma once

#include "adq/trace.hpp"

#include <string>
#include <vector>

namespace adq {

enum class TraceFormat { text, machine };

/// A derivation packaged for output: the method, an echo of the input,
/// the steps exactly as the kernel recorded them, and the result lines.
struct TraceDocument {
    std::string method;
    std::string input;
    std::vector<TraceStep> steps;
    std::vector<std::string> assumptions;
    std::vector<std::string> results;
    std::string outcome;

    static TraceDocument from_trace(std::string method, std::string input,
                                    const DerivationTrace& trace);
};

/// Human-readable rendering, stable line by line.
std::string to_text(const TraceDocument& doc);

/// Machine rendering: one JSON object per line, first line carries
/// trace_version 1. Byte-identical across runs for fixed input.
std::string to_machine(const TraceDocument& doc);

std::string render(const TraceDocument& doc, TraceFormat format);

}  // namespace adq
