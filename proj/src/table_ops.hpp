#pragma once

// Internal helpers shared by the rough-set operations: attribute-name
// resolution, value-tuple grouping, positive-region size. Not installed.

#include "reductforge/decision_table.hpp"
#include "reductforge/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace reductforge::detail {

using AttrMask = std::uint32_t;

// Resolves condition-attribute names to sorted, duplicate-free column
// indices. Throws a lookup error for unknown names and for the decision
// attribute (it is not a condition attribute).
inline std::vector<std::size_t> attr_indices(const DecisionTable& table,
                                             std::span<const std::string> names) {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& name : names) out.push_back(table.attribute_index(name));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline AttrMask mask_of(std::span<const std::size_t> indices) {
    AttrMask m = 0;
    for (std::size_t i : indices) m |= AttrMask{1} << i;
    return m;
}

inline std::vector<std::size_t> indices_of(AttrMask mask, std::size_t attr_count) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < attr_count; ++a)
        if (mask >> a & 1) out.push_back(a);
    return out;
}

// Blocks of the indiscernibility partition induced by the given columns.
// Blocks are ordered by smallest member id; members ascend.
inline std::vector<std::vector<ObjectId>> group_by(const DecisionTable& table,
                                                   std::span<const std::size_t> attrs) {
    std::map<std::vector<Value>, std::size_t> block_of;
    std::vector<std::vector<ObjectId>> blocks;
    std::vector<Value> key(attrs.size());
    for (ObjectId i = 0; i < table.object_count(); ++i) {
        for (std::size_t k = 0; k < attrs.size(); ++k) key[k] = table.value(i, attrs[k]);
        auto [it, inserted] = block_of.try_emplace(key, blocks.size());
        if (inserted) blocks.emplace_back();
        blocks[it->second].push_back(i);
    }
    return blocks;
}

// Number of objects whose block is decision-pure (the positive region).
inline std::size_t positive_region_size(const DecisionTable& table,
                                        std::span<const std::size_t> attrs) {
    struct Group {
        Value decision;
        std::size_t count = 0;
        bool pure = true;
    };
    std::map<std::vector<Value>, Group> groups;
    std::vector<Value> key(attrs.size());
    for (ObjectId i = 0; i < table.object_count(); ++i) {
        for (std::size_t k = 0; k < attrs.size(); ++k) key[k] = table.value(i, attrs[k]);
        auto [it, inserted] = groups.try_emplace(key);
        Group& g = it->second;
        if (inserted) g.decision = table.decision(i);
        else if (g.decision != table.decision(i)) g.pure = false;
        ++g.count;
    }
    std::size_t total = 0;
    for (const auto& [_, g] : groups)
        if (g.pure) total += g.count;
    return total;
}

} // namespace reductforge::detail
