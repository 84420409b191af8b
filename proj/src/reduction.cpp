#include "reductforge/reduction.hpp"

#include "reductforge/error.hpp"
#include "table_ops.hpp"

#include <algorithm>
#include <bit>

namespace reductforge {
namespace {

using detail::AttrMask;

void check_cap(const DecisionTable& table, std::size_t cap) {
    cap = std::min<std::size_t>(cap, 25); // hard ceiling of the subset scan
    if (table.attribute_count() > cap)
        fail(ErrorKind::capacity,
             std::to_string(table.attribute_count()) +
                 " condition attributes exceed the exhaustive-search cap (" +
                 std::to_string(cap) + ")");
}

// Attribute masks of all decision-discernible pairs. Returns the masks
// (possibly with duplicates removed) and whether any pair is
// indistinguishable, i.e. the table is inconsistent.
std::pair<std::vector<AttrMask>, bool> pair_masks(const DecisionTable& table) {
    const std::size_t n = table.object_count();
    const std::size_t m = table.attribute_count();
    std::vector<AttrMask> masks;
    bool inconsistent = false;
    for (ObjectId i = 0; i < n; ++i) {
        for (ObjectId j = i + 1; j < n; ++j) {
            if (table.decision(i) == table.decision(j)) continue;
            AttrMask mask = 0;
            for (std::size_t a = 0; a < m; ++a)
                if (table.value(i, a) != table.value(j, a)) mask |= AttrMask{1} << a;
            if (mask == 0) inconsistent = true;
            else masks.push_back(mask);
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return {std::move(masks), inconsistent};
}

// Absorption: drop every mask that is a superset of another mask. A
// subset hits all survivors iff it hits every original mask.
std::vector<AttrMask> minimal_antichain(std::vector<AttrMask> masks) {
    std::sort(masks.begin(), masks.end(),
              [](AttrMask a, AttrMask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<AttrMask> kept;
    for (AttrMask m : masks) {
        bool absorbed = false;
        for (AttrMask k : kept)
            if ((k & m) == k) { absorbed = true; break; }
        if (!absorbed) kept.push_back(m);
    }
    return kept;
}

// preserve[S] for every attribute subset S: does S keep the positive
// region of the full attribute set? On consistent tables that is exactly
// "S intersects every discernibility mask"; otherwise fall back to direct
// positive-region comparison per subset.
std::vector<bool> preservation_table(const DecisionTable& table) {
    const std::size_t m = table.attribute_count();
    auto [masks, inconsistent] = pair_masks(table);
    std::vector<bool> preserve(std::size_t{1} << m, false);
    if (!inconsistent) {
        auto antichain = minimal_antichain(std::move(masks));
        for (std::size_t s = 0; s < preserve.size(); ++s) {
            bool ok = true;
            for (AttrMask e : antichain)
                if (!(s & e)) { ok = false; break; }
            preserve[s] = ok;
        }
    } else {
        std::vector<std::size_t> all(m);
        for (std::size_t a = 0; a < m; ++a) all[a] = a;
        const std::size_t full = detail::positive_region_size(table, all);
        for (std::size_t s = 0; s < preserve.size(); ++s) {
            auto idx = detail::indices_of(static_cast<AttrMask>(s), m);
            preserve[s] = detail::positive_region_size(table, idx) == full;
        }
    }
    return preserve;
}

std::vector<std::string> names_of(const DecisionTable& table, AttrMask mask) {
    std::vector<std::string> out;
    for (std::size_t a = 0; a < table.attribute_count(); ++a)
        if (mask >> a & 1) out.push_back(table.attribute_names()[a]);
    return out;
}

} // namespace

const DiscernibilityEntry* DiscernibilityMatrix::find(ObjectId a, ObjectId b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{a, b},
                               [](const DiscernibilityEntry& e, const std::pair<ObjectId, ObjectId>& p) {
                                   return std::pair{e.first, e.second} < p;
                               });
    if (it == entries.end() || it->first != a || it->second != b) return nullptr;
    return &*it;
}

DiscernibilityMatrix discernibility_matrix(const DecisionTable& table) {
    DiscernibilityMatrix matrix;
    const std::size_t n = table.object_count();
    const std::size_t m = table.attribute_count();
    for (ObjectId i = 0; i < n; ++i) {
        for (ObjectId j = i + 1; j < n; ++j) {
            if (table.decision(i) == table.decision(j)) continue;
            DiscernibilityEntry entry{i, j, {}};
            for (std::size_t a = 0; a < m; ++a)
                if (table.value(i, a) != table.value(j, a))
                    entry.attributes.push_back(table.attribute_names()[a]);
            if (entry.attributes.empty()) matrix.inconsistent = true;
            matrix.entries.push_back(std::move(entry));
        }
    }
    return matrix;
}

std::vector<Reduct> all_reducts(const DecisionTable& table, std::size_t cap) {
    check_cap(table, cap);
    const std::size_t m = table.attribute_count();
    auto preserve = preservation_table(table);

    std::vector<AttrMask> found;
    for (std::size_t s = 0; s < preserve.size(); ++s) {
        if (!preserve[s]) continue;
        bool minimal = true;
        for (std::size_t a = 0; a < m && minimal; ++a)
            if ((s >> a & 1) && preserve[s & ~(std::size_t{1} << a)]) minimal = false;
        if (minimal) found.push_back(static_cast<AttrMask>(s));
    }
    // size ascending, then lexicographic by attribute index sequence
    std::vector<std::pair<std::vector<std::size_t>, AttrMask>> keyed;
    keyed.reserve(found.size());
    for (AttrMask s : found) keyed.emplace_back(detail::indices_of(s, m), s);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Reduct> out;
    out.reserve(keyed.size());
    for (const auto& [_, s] : keyed) out.push_back(Reduct{names_of(table, s)});
    return out;
}

bool is_reduct(const DecisionTable& table, std::span<const std::string> attrs) {
    auto indices = detail::attr_indices(table, attrs);
    std::vector<std::size_t> all(table.attribute_count());
    for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
    const std::size_t full = detail::positive_region_size(table, all);
    if (detail::positive_region_size(table, indices) != full) return false;
    for (std::size_t drop = 0; drop < indices.size(); ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < indices.size(); ++k)
            if (k != drop) sub.push_back(indices[k]);
        if (detail::positive_region_size(table, sub) == full) return false;
    }
    return true;
}

std::vector<std::string> core(const DecisionTable& table, std::size_t cap) {
    auto reducts = all_reducts(table, cap);
    AttrMask common = ~AttrMask{0};
    for (const auto& r : reducts)
        common &= detail::mask_of(detail::attr_indices(table, r.attributes));
    if (reducts.empty()) common = 0;
    common &= (AttrMask{1} << table.attribute_count()) - 1;
    return names_of(table, common);
}

std::vector<Reduct> filter_full_coverage_reducts(const DecisionTable& table,
                                                 std::span<const Reduct> reducts,
                                                 Value class_value) {
    auto members = table.objects_with_decision(class_value);
    if (members.empty())
        fail(ErrorKind::domain, "decision value " + std::to_string(class_value) +
                                    " not present in decision column");
    std::vector<std::pair<std::vector<std::size_t>, const Reduct*>> keep;
    for (const Reduct& r : reducts) {
        auto indices = detail::attr_indices(table, r.attributes);
        bool single = true;
        for (std::size_t k = 1; k < members.size() && single; ++k)
            for (std::size_t a : indices)
                if (table.value(members[k], a) != table.value(members[0], a)) {
                    single = false;
                    break;
                }
        if (single) keep.emplace_back(std::move(indices), &r);
    }
    std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Reduct> out;
    out.reserve(keep.size());
    for (const auto& [indices, r] : keep) {
        std::vector<std::string> names;
        for (std::size_t a : indices) names.push_back(table.attribute_names()[a]);
        out.push_back(Reduct{std::move(names)});
    }
    return out;
}

} // namespace reductforge
