#include "reductforge/rough.hpp"

#include "reductforge/error.hpp"
#include "table_ops.hpp"

#include <algorithm>

namespace reductforge {
namespace {

std::vector<bool> target_bits(const DecisionTable& table, std::span<const ObjectId> target) {
    std::vector<bool> bits(table.object_count(), false);
    for (ObjectId id : target) {
        if (id >= table.object_count())
            fail(ErrorKind::domain, "object id " + std::to_string(id) + " out of range");
        bits[id] = true;
    }
    return bits;
}

} // namespace

Partition ind_partition(const DecisionTable& table, std::span<const std::string> attrs) {
    return Partition{detail::group_by(table, detail::attr_indices(table, attrs))};
}

ApproximationReport approximate(const DecisionTable& table,
                                std::span<const std::string> attrs,
                                std::span<const ObjectId> target) {
    auto bits = target_bits(table, target);
    ApproximationReport report;
    for (const auto& block : detail::group_by(table, detail::attr_indices(table, attrs))) {
        std::size_t hits = 0;
        for (ObjectId id : block) hits += bits[id];
        if (hits == block.size())
            report.lower.insert(report.lower.end(), block.begin(), block.end());
        if (hits > 0)
            report.upper.insert(report.upper.end(), block.begin(), block.end());
    }
    std::sort(report.lower.begin(), report.lower.end());
    std::sort(report.upper.begin(), report.upper.end());
    std::set_difference(report.upper.begin(), report.upper.end(), report.lower.begin(),
                        report.lower.end(), std::back_inserter(report.boundary));
    report.accuracy = report.upper.empty()
                          ? Ratio(0)
                          : Ratio(static_cast<std::int64_t>(report.lower.size()),
                                  static_cast<std::int64_t>(report.upper.size()));
    return report;
}

std::vector<ObjectId> lower_approximation(const DecisionTable& table,
                                          std::span<const std::string> attrs,
                                          std::span<const ObjectId> target) {
    return approximate(table, attrs, target).lower;
}

std::vector<ObjectId> upper_approximation(const DecisionTable& table,
                                          std::span<const std::string> attrs,
                                          std::span<const ObjectId> target) {
    return approximate(table, attrs, target).upper;
}

Ratio accuracy_of_approximation(const DecisionTable& table,
                                std::span<const std::string> attrs,
                                std::span<const ObjectId> target) {
    if (target.empty()) fail(ErrorKind::domain, "target set is empty");
    return approximate(table, attrs, target).accuracy;
}

Ratio quality_of_classification(const DecisionTable& table,
                                std::span<const std::string> attrs) {
    auto indices = detail::attr_indices(table, attrs);
    return Ratio(static_cast<std::int64_t>(detail::positive_region_size(table, indices)),
                 static_cast<std::int64_t>(table.object_count()));
}

} // namespace reductforge
