#pragma once

#include "reductforge/decision_table.hpp"
#include "reductforge/rational.hpp"
#include "reductforge/reduction.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reductforge {

// One attribute = value condition of a decision rule.
struct Descriptor {
    std::string attribute;
    Value value = 0;

    bool operator==(const Descriptor&) const = default;
};

// Exact rule statistics. certainty is absent when nothing matches the
// descriptors; coverage is absent when the rule's decision class is empty.
// Absent is distinct from zero: zero certainty would falsely claim
// contradiction.
struct RuleMetrics {
    std::int64_t support = 0;     // objects matching descriptors and decision
    std::int64_t match_count = 0; // objects matching descriptors
    std::optional<Ratio> certainty;
    std::optional<Ratio> coverage;
    Ratio strength{0};

    bool operator==(const RuleMetrics&) const = default;
};

struct DecisionRule {
    std::vector<Descriptor> descriptors; // attribute names distinct
    Value decision = 0;
    RuleMetrics metrics;

    bool operator==(const DecisionRule&) const = default;
};

// One rule per distinct projection of the class objects onto the reduct's
// attributes, ordered by first-occurrence row; metrics computed against
// the full table.
std::vector<DecisionRule> induce_rules(const DecisionTable& table, const Reduct& reduct,
                                       Value class_value);

// Recomputes all metrics from scratch.
RuleMetrics rule_metrics(const DecisionTable& table, const DecisionRule& rule);

// Decision of the first rule whose descriptors all match, else `fallback`.
// The object must supply a value for every attribute referenced by any rule.
Value classify(std::span<const DecisionRule> rules,
               const std::map<std::string, Value>& object, Value fallback);

// `(w8=1) & (w9=0) => D=1 [support=4 certainty=1.00 coverage=1.00 strength=0.27]`
std::string render_rule(const DecisionRule& rule, std::string_view decision_name);

// Parses the compact rule grammar `w8=1&w9=0=>1`. Throws a usage error on
// malformed input; the result carries no metrics.
DecisionRule parse_rule_spec(std::string_view spec);

} // namespace reductforge
