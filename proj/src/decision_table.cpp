#include "reductforge/decision_table.hpp"

#include "reductforge/error.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace reductforge {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

Value parse_cell(std::string_view cell, std::size_t row_number) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        fail(ErrorKind::parse, "row " + std::to_string(row_number) +
                                   ": not an integer: '" + std::string(cell) + "'");
    if (v < 0)
        fail(ErrorKind::parse, "row " + std::to_string(row_number) +
                                   ": negative value " + std::to_string(v));
    return v;
}

} // namespace

DecisionTable::DecisionTable(std::vector<std::string> attribute_names,
                             std::string decision_name,
                             const std::vector<std::vector<Value>>& rows)
    : attribute_names_(std::move(attribute_names)), decision_name_(std::move(decision_name)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : attribute_names_) {
        if (name.empty()) fail(ErrorKind::schema, "empty attribute name");
        if (!seen.insert(name).second)
            fail(ErrorKind::schema, "duplicate attribute name '" + name + "'");
    }
    if (decision_name_.empty()) fail(ErrorKind::schema, "empty decision name");
    if (seen.count(decision_name_))
        fail(ErrorKind::schema, "duplicate attribute name '" + decision_name_ + "'");
    if (rows.empty()) fail(ErrorKind::schema, "table has no objects");

    const std::size_t width = attribute_names_.size() + 1;
    conditions_.reserve(rows.size());
    decisions_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width)
            fail(ErrorKind::schema, "row " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(width) + " values, found " +
                                        std::to_string(rows[i].size()));
        for (Value v : rows[i])
            if (v < 0)
                fail(ErrorKind::schema,
                     "row " + std::to_string(i + 1) + ": negative value");
        conditions_.emplace_back(rows[i].begin(), rows[i].end() - 1);
        decisions_.push_back(rows[i].back());
    }
    for (std::size_t a = 0; a < attribute_names_.size(); ++a)
        index_.emplace(attribute_names_[a], a);
}

DecisionTable DecisionTable::parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    std::size_t first = 0;
    while (first < lines.size() && trim(lines[first]).empty()) ++first;
    if (first == lines.size()) fail(ErrorKind::parse, "empty input");

    auto header = split(lines[first], ',');
    for (const auto& name : header)
        if (name.empty()) fail(ErrorKind::parse, "empty name in header");
    std::vector<std::string> attrs(header.begin(), header.end() - 1);
    std::string decision(header.back());

    std::vector<std::vector<Value>> rows;
    std::size_t row_number = 0;
    for (std::size_t li = first + 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        ++row_number;
        auto cells = split(lines[li], ',');
        if (cells.size() != header.size())
            fail(ErrorKind::parse, "row " + std::to_string(row_number) + ": expected " +
                                       std::to_string(header.size()) + " values, found " +
                                       std::to_string(cells.size()));
        std::vector<Value> row;
        row.reserve(cells.size());
        for (auto cell : cells) row.push_back(parse_cell(cell, row_number));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorKind::parse, "no data rows");
    return DecisionTable(std::move(attrs), std::move(decision), rows);
}

std::optional<std::size_t> DecisionTable::find_attribute(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DecisionTable::attribute_index(std::string_view name) const {
    auto idx = find_attribute(name);
    if (!idx) fail(ErrorKind::lookup, "unknown attribute '" + std::string(name) + "'");
    return *idx;
}

std::set<Value> DecisionTable::value_domain(std::string_view name) const {
    std::set<Value> out;
    if (name == decision_name_) {
        out.insert(decisions_.begin(), decisions_.end());
        return out;
    }
    std::size_t a = attribute_index(name);
    for (const auto& row : conditions_) out.insert(row[a]);
    return out;
}

std::vector<Value> DecisionTable::decision_classes() const {
    std::vector<Value> out(decisions_.begin(), decisions_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ObjectId> DecisionTable::objects_with_decision(Value v) const {
    std::vector<ObjectId> out;
    for (ObjectId i = 0; i < decisions_.size(); ++i)
        if (decisions_[i] == v) out.push_back(i);
    return out;
}

std::string DecisionTable::to_csv() const {
    std::string out;
    for (const auto& name : attribute_names_) {
        out += name;
        out += ',';
    }
    out += decision_name_;
    out += '\n';
    for (ObjectId i = 0; i < object_count(); ++i) {
        for (Value v : conditions_[i]) {
            out += std::to_string(v);
            out += ',';
        }
        out += std::to_string(decisions_[i]);
        out += '\n';
    }
    return out;
}

} // namespace reductforge
