#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reductforge {

using Value = int;          // discrete, small, non-negative
using ObjectId = std::size_t; // 0-based row index; duplicates rows are distinct objects

// An information system with one designated decision attribute: a finite,
// rectangular table of discrete values. Immutable after construction;
// reads are safe from any number of concurrent callers.
class DecisionTable {
public:
    // `rows` holds one entry per object: all condition values in
    // attribute order followed by the decision value.
    DecisionTable(std::vector<std::string> attribute_names,
                  std::string decision_name,
                  const std::vector<std::vector<Value>>& rows);

    // CSV ingestion. First line is the header; the final column is the
    // decision attribute. Integer cells only, LF or CRLF.
    static DecisionTable parse_csv(std::string_view text);

    std::size_t object_count() const { return decisions_.size(); }
    std::size_t attribute_count() const { return attribute_names_.size(); }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::string& decision_name() const { return decision_name_; }

    Value value(ObjectId object, std::size_t attribute) const {
        return conditions_[object][attribute];
    }
    std::span<const Value> condition_row(ObjectId object) const {
        return conditions_[object];
    }
    Value decision(ObjectId object) const { return decisions_[object]; }

    std::optional<std::size_t> find_attribute(std::string_view name) const;
    // As find_attribute but throws a lookup error for unknown names.
    std::size_t attribute_index(std::string_view name) const;

    // Distinct values observed in the named condition or decision column.
    std::set<Value> value_domain(std::string_view name) const;

    std::vector<Value> decision_classes() const;              // distinct, ascending
    std::vector<ObjectId> objects_with_decision(Value v) const;

    std::string to_csv() const;

    bool operator==(const DecisionTable&) const = default;

private:
    std::vector<std::string> attribute_names_;
    std::string decision_name_;
    std::vector<std::vector<Value>> conditions_;
    std::vector<Value> decisions_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace reductforge
