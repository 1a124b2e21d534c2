#include "adq/trace.hpp"

#include <algorithm>

namespace adq {

void DerivationTrace::append(std::string rule, std::string before, std::string after,
                             std::string note) {
    steps_.push_back({std::move(rule), std::move(before), std::move(after), std::move(note)});
}

void DerivationTrace::assume(const std::string& assumption) {
    if (std::find(assumptions_.begin(), assumptions_.end(), assumption) == assumptions_.end())
        assumptions_.push_back(assumption);
}

bool DerivationTrace::has_rule(const std::string& rule) const {
    return std::any_of(steps_.begin(), steps_.end(),
                       [&](const TraceStep& s) { return s.rule == rule; });
}

}  // namespace adq
