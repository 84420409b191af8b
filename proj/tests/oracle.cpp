#include "oracle.hpp"

#include <algorithm>
#include <string>

namespace oracle {

bool indiscernible(const DecisionTable& table, ObjectId x, ObjectId y,
                   const std::vector<std::size_t>& attrs) {
    for (std::size_t a : attrs)
        if (table.value(x, a) != table.value(y, a)) return false;
    return true;
}

std::vector<ObjectId> lower(const DecisionTable& table, const std::vector<std::size_t>& attrs,
                            const std::set<ObjectId>& target) {
    std::vector<ObjectId> out;
    for (ObjectId x = 0; x < table.object_count(); ++x) {
        bool contained = true;
        for (ObjectId y = 0; y < table.object_count() && contained; ++y)
            if (indiscernible(table, x, y, attrs) && !target.count(y)) contained = false;
        if (contained) out.push_back(x);
    }
    return out;
}

std::vector<ObjectId> upper(const DecisionTable& table, const std::vector<std::size_t>& attrs,
                            const std::set<ObjectId>& target) {
    std::vector<ObjectId> out;
    for (ObjectId x = 0; x < table.object_count(); ++x) {
        for (ObjectId y = 0; y < table.object_count(); ++y)
            if (indiscernible(table, x, y, attrs) && target.count(y)) {
                out.push_back(x);
                break;
            }
    }
    return out;
}

Ratio gamma(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    std::int64_t positive = 0;
    for (ObjectId x = 0; x < table.object_count(); ++x) {
        bool pure = true;
        for (ObjectId y = 0; y < table.object_count() && pure; ++y)
            if (indiscernible(table, x, y, attrs) && table.decision(y) != table.decision(x))
                pure = false;
        positive += pure;
    }
    return Ratio(positive, static_cast<std::int64_t>(table.object_count()));
}

std::vector<std::vector<std::size_t>> reducts(const DecisionTable& table) {
    const std::size_t m = table.attribute_count();
    std::vector<std::size_t> everything = all_attrs(table);
    const Ratio full = gamma(table, everything);

    std::vector<bool> preserves(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < preserves.size(); ++mask) {
        std::vector<std::size_t> attrs;
        for (std::size_t a = 0; a < m; ++a)
            if (mask >> a & 1) attrs.push_back(a);
        preserves[mask] = gamma(table, attrs) == full;
    }

    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < preserves.size(); ++mask) {
        if (!preserves[mask]) continue;
        bool minimal = true;
        for (std::size_t sub = (mask - 1) & mask; minimal; sub = (sub - 1) & mask) {
            if (preserves[sub]) minimal = false;
            if (sub == 0) break;
        }
        if (mask == 0) minimal = true;
        if (!minimal) continue;
        std::vector<std::size_t> attrs;
        for (std::size_t a = 0; a < m; ++a)
            if (mask >> a & 1) attrs.push_back(a);
        out.push_back(std::move(attrs));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

DecisionTable random_table(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> objects_dist(1, 8), attrs_dist(1, 6);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t n = objects_dist(rng);
    const std::size_t m = attrs_dist(rng);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) names.push_back("c" + std::to_string(a));
    std::vector<std::vector<Value>> rows(n);
    for (auto& row : rows) {
        row.resize(m + 1);
        for (auto& v : row) v = bit(rng);
    }
    return DecisionTable(std::move(names), "d", rows);
}

std::vector<std::size_t> all_attrs(const DecisionTable& table) {
    std::vector<std::size_t> out(table.attribute_count());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = a;
    return out;
}

} // namespace oracle
