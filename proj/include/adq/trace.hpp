#pragma once

#include <string>
#include <vector>

namespace adq {

/// One rewrite step of a derivation. "before" and "after" are the
/// rendered states around the rule application; "note" is commentary.
struct TraceStep {
    std::string rule;
    std::string before;
    std::string after;
    std::string note;

    bool operator==(const TraceStep&) const = default;
};

/// Ordered record of every kernel rule applied, plus the standing
/// assumptions (positivity of the increment, nonnegative radicands).
/// The kernel refuses to append a "suppress" step unless a "divide"
/// step is already present.
class DerivationTrace {
public:
    void append(std::string rule, std::string before, std::string after, std::string note = "");
    void assume(const std::string& assumption);

    bool has_rule(const std::string& rule) const;
    const std::vector<TraceStep>& steps() const { return steps_; }
    const std::vector<std::string>& assumptions() const { return assumptions_; }

private:
    std::vector<TraceStep> steps_;
    std::vector<std::string> assumptions_;
};

}  // namespace adq
