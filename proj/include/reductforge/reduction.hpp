#pragma once

#include "reductforge/decision_table.hpp"

#include <span>
#include <string>
#include <vector>

namespace reductforge {

// Decision-relative discernibility matrix: one entry per unordered object
// pair with differing decision values, holding the condition attributes on
// which the pair differs. An empty attribute set marks the table
// inconsistent at that pair.
struct DiscernibilityEntry {
    ObjectId first = 0;  // first < second
    ObjectId second = 0;
    std::vector<std::string> attributes; // column order; empty -> inconsistent pair

    bool operator==(const DiscernibilityEntry&) const = default;
};

struct DiscernibilityMatrix {
    std::vector<DiscernibilityEntry> entries; // ordered by (first, second)
    bool inconsistent = false;

    // Entry for the unordered pair {a, b}, or nullptr if the pair has
    // equal decisions.
    const DiscernibilityEntry* find(ObjectId a, ObjectId b) const;
};

// Minimal positive-region-preserving condition-attribute set. Attributes
// are kept in table column order.
struct Reduct {
    std::vector<std::string> attributes;

    bool operator==(const Reduct&) const = default;
};

// Exhaustive subset search refuses tables wider than this by default.
inline constexpr std::size_t kDefaultReductCap = 20;

DiscernibilityMatrix discernibility_matrix(const DecisionTable& table);

// Every minimal attribute subset preserving the full-attribute quality of
// classification, sorted by size then lexicographic attribute order.
std::vector<Reduct> all_reducts(const DecisionTable& table,
                                std::size_t cap = kDefaultReductCap);

// True iff `attrs` preserves the full-attribute quality of classification
// and no proper subset does.
bool is_reduct(const DecisionTable& table, std::span<const std::string> attrs);

// Intersection of all reducts, in table column order.
std::vector<std::string> core(const DecisionTable& table,
                              std::size_t cap = kDefaultReductCap);

// Keeps the reducts whose projection of the class_value objects collapses
// to a single descriptor tuple: one induced rule covering the whole class.
// Output ordered as in all_reducts.
std::vector<Reduct> filter_full_coverage_reducts(const DecisionTable& table,
                                                 std::span<const Reduct> reducts,
                                                 Value class_value);

} // namespace reductforge
