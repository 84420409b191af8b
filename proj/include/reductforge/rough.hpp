#pragma once

#include "reductforge/decision_table.hpp"
#include "reductforge/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace reductforge {

// Indiscernibility partition of the universe. Blocks are pairwise
// disjoint, cover the universe, and are ordered by smallest member id;
// members ascend within a block.
struct Partition {
    std::vector<std::vector<ObjectId>> blocks;

    bool operator==(const Partition&) const = default;
};

// Rough approximation of one target set: lower/upper/boundary plus exact
// accuracy |lower| / |upper|.
struct ApproximationReport {
    std::vector<ObjectId> lower;
    std::vector<ObjectId> upper;
    std::vector<ObjectId> boundary;
    Ratio accuracy;
};

// Partition of all objects by agreement on every attribute in `attrs`.
// The empty attribute set yields one block holding the whole universe.
Partition ind_partition(const DecisionTable& table, std::span<const std::string> attrs);

// Union of partition blocks wholly contained in `target`.
std::vector<ObjectId> lower_approximation(const DecisionTable& table,
                                          std::span<const std::string> attrs,
                                          std::span<const ObjectId> target);

// Union of partition blocks intersecting `target`.
std::vector<ObjectId> upper_approximation(const DecisionTable& table,
                                          std::span<const std::string> attrs,
                                          std::span<const ObjectId> target);

// |lower| / |upper|; requires a non-empty target.
Ratio accuracy_of_approximation(const DecisionTable& table,
                                std::span<const std::string> attrs,
                                std::span<const ObjectId> target);

// Lower, upper, boundary and accuracy in one pass over the partition.
ApproximationReport approximate(const DecisionTable& table,
                                std::span<const std::string> attrs,
                                std::span<const ObjectId> target);

// Share of objects in no decision class's boundary region: the positive
// region's fraction of the universe.
Ratio quality_of_classification(const DecisionTable& table,
                                std::span<const std::string> attrs);

} // namespace reductforge
