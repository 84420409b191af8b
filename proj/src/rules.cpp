#include "reductforge/rules.hpp"

#include "reductforge/error.hpp"
#include "table_ops.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace reductforge {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Value parse_value(std::string_view text, std::string_view what) {
    text = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0)
        fail(ErrorKind::usage,
             "bad rule spec: " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

bool matches(const DecisionTable& table, ObjectId object,
             std::span<const std::pair<std::size_t, Value>> conditions) {
    for (const auto& [attr, value] : conditions)
        if (table.value(object, attr) != value) return false;
    return true;
}

std::vector<std::pair<std::size_t, Value>> resolve(const DecisionTable& table,
                                                   const DecisionRule& rule) {
    std::vector<std::pair<std::size_t, Value>> out;
    out.reserve(rule.descriptors.size());
    for (const auto& d : rule.descriptors)
        out.emplace_back(table.attribute_index(d.attribute), d.value);
    return out;
}

} // namespace

RuleMetrics rule_metrics(const DecisionTable& table, const DecisionRule& rule) {
    auto conditions = resolve(table, rule);
    RuleMetrics m;
    std::int64_t class_size = 0;
    for (ObjectId i = 0; i < table.object_count(); ++i) {
        bool in_class = table.decision(i) == rule.decision;
        class_size += in_class;
        if (!matches(table, i, conditions)) continue;
        ++m.match_count;
        m.support += in_class;
    }
    if (m.match_count > 0) m.certainty = Ratio(m.support, m.match_count);
    if (class_size > 0) m.coverage = Ratio(m.support, class_size);
    m.strength = Ratio(m.support, static_cast<std::int64_t>(table.object_count()));
    return m;
}

std::vector<DecisionRule> induce_rules(const DecisionTable& table, const Reduct& reduct,
                                       Value class_value) {
    auto members = table.objects_with_decision(class_value);
    if (members.empty())
        fail(ErrorKind::domain, "decision value " + std::to_string(class_value) +
                                    " not present in decision column");
    auto indices = detail::attr_indices(table, reduct.attributes);

    std::vector<DecisionRule> rules;
    std::vector<std::vector<Value>> seen;
    for (ObjectId obj : members) { // ascending ids = first-occurrence order
        std::vector<Value> proj(indices.size());
        for (std::size_t k = 0; k < indices.size(); ++k) proj[k] = table.value(obj, indices[k]);
        if (std::find(seen.begin(), seen.end(), proj) != seen.end()) continue;
        seen.push_back(proj);
        DecisionRule rule;
        rule.decision = class_value;
        for (std::size_t k = 0; k < indices.size(); ++k)
            rule.descriptors.push_back({table.attribute_names()[indices[k]], proj[k]});
        rule.metrics = rule_metrics(table, rule);
        rules.push_back(std::move(rule));
    }
    return rules;
}

Value classify(std::span<const DecisionRule> rules,
               const std::map<std::string, Value>& object, Value fallback) {
    for (const auto& rule : rules)
        for (const auto& d : rule.descriptors)
            if (!object.count(d.attribute))
                fail(ErrorKind::input,
                     "object missing value for attribute '" + d.attribute + "'");
    for (const auto& rule : rules) {
        bool hit = true;
        for (const auto& d : rule.descriptors)
            if (object.at(d.attribute) != d.value) { hit = false; break; }
        if (hit) return rule.decision;
    }
    return fallback;
}

std::string render_rule(const DecisionRule& rule, std::string_view decision_name) {
    std::string out;
    if (rule.descriptors.empty()) out += "TRUE";
    for (std::size_t i = 0; i < rule.descriptors.size(); ++i) {
        if (i) out += " & ";
        out += '(';
        out += rule.descriptors[i].attribute;
        out += '=';
        out += std::to_string(rule.descriptors[i].value);
        out += ')';
    }
    out += " => ";
    out += decision_name;
    out += '=';
    out += std::to_string(rule.decision);
    out += " [support=" + std::to_string(rule.metrics.support);
    out += " certainty=";
    out += rule.metrics.certainty ? format_fixed2(*rule.metrics.certainty) : "undefined";
    out += " coverage=";
    out += rule.metrics.coverage ? format_fixed2(*rule.metrics.coverage) : "undefined";
    out += " strength=" + format_fixed2(rule.metrics.strength);
    out += ']';
    return out;
}

DecisionRule parse_rule_spec(std::string_view spec) {
    auto arrow = spec.find("=>");
    if (arrow == std::string_view::npos)
        fail(ErrorKind::usage, "bad rule spec: missing '=>' in '" + std::string(spec) + "'");
    DecisionRule rule;
    rule.decision = parse_value(spec.substr(arrow + 2), "decision value");

    std::string_view lhs = spec.substr(0, arrow);
    std::unordered_set<std::string> names;
    std::size_t start = 0;
    while (true) {
        std::size_t amp = lhs.find('&', start);
        std::string_view term =
            trim(amp == std::string_view::npos ? lhs.substr(start) : lhs.substr(start, amp - start));
        auto eq = term.find('=');
        if (eq == std::string_view::npos || eq == 0)
            fail(ErrorKind::usage, "bad rule spec: expected name=value, got '" +
                                       std::string(term) + "'");
        std::string name(trim(term.substr(0, eq)));
        Value value = parse_value(term.substr(eq + 1), "descriptor value");
        if (!names.insert(name).second)
            fail(ErrorKind::usage, "bad rule spec: duplicate attribute '" + name + "'");
        rule.descriptors.push_back({std::move(name), value});
        if (amp == std::string_view::npos) break;
        start = amp + 1;
    }
    return rule;
}

} // namespace reductforge
