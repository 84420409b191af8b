#include "reductforge/cli.hpp"

#include "reductforge/circuit.hpp"
#include "reductforge/decision_table.hpp"
#include "reductforge/error.hpp"
#include "reductforge/reduction.hpp"
#include "reductforge/rough.hpp"
#include "reductforge/rules.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace reductforge::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

struct InputFile {
    std::string path;
    std::string digest;
    std::string content;
};

InputFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    InputFile file{path, "", buffer.str()};
    file.digest = fnv1a64_hex(file.content);
    return file;
}

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

ordered_json envelope(std::string_view command) {
    return ordered_json{{"schema", 1},
                        {"command", std::string(command)},
                        {"inputs", ordered_json::object()},
                        {"result", ordered_json::object()}};
}

ordered_json input_json(const InputFile& file) {
    return ordered_json{{"path", file.path}, {"fnv1a64", file.digest}};
}

std::string input_line(std::string_view label, const InputFile& file) {
    return std::string(label) + ": " + file.path + " fnv1a64:" + file.digest;
}

std::string braces(std::span<const std::string> names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += "}";
    return out;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        std::string name =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        while (!name.empty() && name.back() == ' ') name.pop_back();
        if (name.empty()) fail(ErrorKind::usage, "empty name in attribute list '" + csv + "'");
        out.push_back(std::move(name));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

ordered_json rule_json(const DecisionRule& rule) {
    ordered_json descriptors = ordered_json::array();
    for (const auto& d : rule.descriptors)
        descriptors.push_back(ordered_json{{"attribute", d.attribute}, {"value", d.value}});
    ordered_json j{{"descriptors", std::move(descriptors)},
                   {"decision", rule.decision},
                   {"support", rule.metrics.support}};
    j["certainty"] =
        rule.metrics.certainty ? ordered_json(format_fixed2(*rule.metrics.certainty)) : nullptr;
    j["coverage"] =
        rule.metrics.coverage ? ordered_json(format_fixed2(*rule.metrics.coverage)) : nullptr;
    j["strength"] = format_fixed2(rule.metrics.strength);
    return j;
}

int cmd_analyze(const std::string& table_path, Format fmt, std::ostream& out) {
    auto file = load(table_path);
    auto table = DecisionTable::parse_csv(file.content);
    const auto& attrs = table.attribute_names();

    struct ClassRow {
        Value decision;
        std::size_t objects, lower, upper, boundary;
        std::string accuracy;
    };
    std::vector<ClassRow> classes;
    for (Value v : table.decision_classes()) {
        auto target = table.objects_with_decision(v);
        auto report = approximate(table, attrs, target);
        classes.push_back({v, target.size(), report.lower.size(), report.upper.size(),
                           report.boundary.size(), format_fixed2(report.accuracy)});
    }
    std::string quality = format_fixed2(quality_of_classification(table, attrs));

    if (fmt == Format::json) {
        auto doc = envelope("analyze");
        doc["inputs"]["table"] = input_json(file);
        doc["result"]["objects"] = table.object_count();
        doc["result"]["condition_attributes"] = table.attribute_count();
        auto rows = ordered_json::array();
        for (const auto& c : classes)
            rows.push_back(ordered_json{{"decision", c.decision},
                                        {"objects", c.objects},
                                        {"lower", c.lower},
                                        {"upper", c.upper},
                                        {"boundary", c.boundary},
                                        {"accuracy", c.accuracy}});
        doc["result"]["classes"] = std::move(rows);
        doc["result"]["quality"] = quality;
        emit_json(out, doc);
    } else {
        out << "command: analyze\n" << input_line("table", file) << "\n";
        out << "objects: " << table.object_count() << "\n";
        out << "condition attributes: " << table.attribute_count() << "\n";
        for (const auto& c : classes)
            out << "class " << table.decision_name() << "=" << c.decision << ": objects="
                << c.objects << " lower=" << c.lower << " upper=" << c.upper
                << " boundary=" << c.boundary << " accuracy=" << c.accuracy << "\n";
        out << "quality: " << quality << "\n";
    }
    return 0;
}

int cmd_reducts(const std::string& table_path, std::optional<Value> full_coverage_class,
                bool with_core, Format fmt, std::ostream& out) {
    auto file = load(table_path);
    auto table = DecisionTable::parse_csv(file.content);
    auto reducts = all_reducts(table);

    std::optional<std::vector<Reduct>> filtered;
    if (full_coverage_class)
        filtered = filter_full_coverage_reducts(table, reducts, *full_coverage_class);
    std::optional<std::vector<std::string>> core_attrs;
    if (with_core) core_attrs = core(table);

    if (fmt == Format::json) {
        auto doc = envelope("reducts");
        doc["inputs"]["table"] = input_json(file);
        doc["result"]["count"] = reducts.size();
        if (filtered) {
            auto list = ordered_json::array();
            for (const auto& r : *filtered) list.push_back(r.attributes);
            doc["result"]["full_coverage"] = ordered_json{{"class", *full_coverage_class},
                                                          {"count", filtered->size()},
                                                          {"reducts", std::move(list)}};
        } else {
            auto list = ordered_json::array();
            for (const auto& r : reducts) list.push_back(r.attributes);
            doc["result"]["reducts"] = std::move(list);
        }
        if (core_attrs) doc["result"]["core"] = *core_attrs;
        emit_json(out, doc);
    } else {
        out << "command: reducts\n" << input_line("table", file) << "\n";
        out << "reducts: " << reducts.size() << "\n";
        if (filtered) {
            out << "full coverage (class " << *full_coverage_class << "): " << filtered->size()
                << "\n";
            for (const auto& r : *filtered) out << braces(r.attributes) << "\n";
        } else {
            for (const auto& r : reducts) out << braces(r.attributes) << "\n";
        }
        if (core_attrs) out << "core: " << braces(*core_attrs) << "\n";
    }
    return 0;
}

int cmd_rules(const std::string& table_path, const std::string& attr_list, Value class_value,
              Format fmt, std::ostream& out) {
    auto file = load(table_path);
    auto table = DecisionTable::parse_csv(file.content);
    Reduct reduct{split_names(attr_list)};
    auto rules = induce_rules(table, reduct, class_value);

    if (fmt == Format::json) {
        auto doc = envelope("rules");
        doc["inputs"]["table"] = input_json(file);
        doc["result"]["reduct"] = reduct.attributes;
        doc["result"]["class"] = class_value;
        doc["result"]["count"] = rules.size();
        auto list = ordered_json::array();
        for (const auto& rule : rules) list.push_back(rule_json(rule));
        doc["result"]["rules"] = std::move(list);
        emit_json(out, doc);
    } else {
        out << "command: rules\n" << input_line("table", file) << "\n";
        out << "reduct: " << braces(reduct.attributes) << "\n";
        out << "class: " << class_value << "\n";
        out << "rules: " << rules.size() << "\n";
        for (const auto& rule : rules) out << render_rule(rule, table.decision_name()) << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& net_path, const std::string& assign, Format fmt,
                 std::ostream& out) {
    auto file = load(net_path);
    auto net = Netlist::parse(file.content);
    if (assign.size() != net.inputs().size())
        fail(ErrorKind::usage, "--assign needs " + std::to_string(net.inputs().size()) +
                                   " bits, got " + std::to_string(assign.size()));
    std::map<std::string, int> assignment;
    for (std::size_t i = 0; i < assign.size(); ++i) {
        if (assign[i] != '0' && assign[i] != '1')
            fail(ErrorKind::usage, "--assign must contain only 0/1 bits");
        assignment[net.inputs()[i]] = assign[i] - '0';
    }
    auto valuation = simulate(net, assignment);

    if (fmt == Format::json) {
        auto doc = envelope("simulate");
        doc["inputs"]["net"] = input_json(file);
        doc["result"]["assignment"] = assign;
        auto wires = ordered_json::array();
        for (std::size_t id = 0; id < net.wire_count(); ++id)
            wires.push_back(ordered_json{{"wire", net.wire_name(id)},
                                         {"value", valuation.at(net.wire_name(id))}});
        doc["result"]["wires"] = std::move(wires);
        doc["result"]["output"] = valuation.at(net.output());
        emit_json(out, doc);
    } else {
        out << "command: simulate\n" << input_line("netlist", file) << "\n";
        out << "assignment: " << assign << "\n";
        for (std::size_t id = 0; id < net.wire_count(); ++id)
            out << net.wire_name(id) << "=" << valuation.at(net.wire_name(id)) << "\n";
        out << "output: " << valuation.at(net.output()) << "\n";
    }
    return 0;
}

int cmd_table(const std::string& net_path, Format fmt, std::ostream& out) {
    auto file = load(net_path);
    auto net = Netlist::parse(file.content);
    auto table = build_decision_table(net);

    if (fmt == Format::json) {
        auto doc = envelope("table");
        doc["inputs"]["net"] = input_json(file);
        doc["result"]["attributes"] = table.attribute_names();
        doc["result"]["decision"] = table.decision_name();
        auto rows = ordered_json::array();
        for (ObjectId i = 0; i < table.object_count(); ++i) {
            auto row = ordered_json::array();
            for (Value v : table.condition_row(i)) row.push_back(v);
            row.push_back(table.decision(i));
            rows.push_back(std::move(row));
        }
        doc["result"]["rows"] = std::move(rows);
        emit_json(out, doc);
    } else {
        // bare CSV so the output can feed --table of other subcommands
        out << table.to_csv();
    }
    return 0;
}

int cmd_minimize(const std::string& net_path, const std::string& rule_spec,
                 const std::string& out_path, Format fmt, std::ostream& out) {
    auto file = load(net_path);
    auto net = Netlist::parse(file.content);
    auto rule = parse_rule_spec(rule_spec);
    auto table = build_decision_table(net);
    rule.metrics = rule_metrics(table, rule);
    if (!rule.metrics.certainty || *rule.metrics.certainty != 1 || !rule.metrics.coverage ||
        *rule.metrics.coverage != 1)
        fail(ErrorKind::domain,
             "rule must hold with certainty 1 and coverage 1 on the netlist's decision table: " +
                 render_rule(rule, table.decision_name()));

    auto minimized = minimize_netlist(net, rule);
    auto verdict = check_equivalence(net, minimized);
    std::string text = minimized.to_text();
    if (!out_path.empty()) {
        std::ofstream file_out(out_path, std::ios::binary);
        if (!file_out) fail(ErrorKind::io, "cannot write file: " + out_path);
        file_out << text;
    }

    if (fmt == Format::json) {
        auto doc = envelope("minimize");
        doc["inputs"]["net"] = input_json(file);
        doc["result"]["rule"] = rule_json(rule);
        doc["result"]["original_gates"] = net.gate_count();
        doc["result"]["minimized_gates"] = minimized.gate_count();
        doc["result"]["equivalent"] = verdict.equivalent;
        doc["result"]["netlist"] = text;
        if (!out_path.empty()) doc["result"]["written"] = out_path;
        emit_json(out, doc);
    } else {
        out << "command: minimize\n" << input_line("netlist", file) << "\n";
        out << "rule: " << render_rule(rule, table.decision_name()) << "\n";
        out << "original gates: " << net.gate_count() << "\n";
        out << "minimized gates: " << minimized.gate_count() << "\n";
        out << "equivalent: " << (verdict.equivalent ? "yes" : "no") << "\n";
        if (!out_path.empty()) out << "written: " << out_path << "\n";
        out << "netlist:\n" << text;
    }
    return 0;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, Format fmt,
               std::ostream& out) {
    auto file_a = load(a_path);
    auto file_b = load(b_path);
    auto net_a = Netlist::parse(file_a.content);
    auto net_b = Netlist::parse(file_b.content);
    auto verdict = check_equivalence(net_a, net_b);

    if (fmt == Format::json) {
        auto doc = envelope("verify");
        doc["inputs"]["net_a"] = input_json(file_a);
        doc["inputs"]["net_b"] = input_json(file_b);
        doc["result"]["equivalent"] = verdict.equivalent;
        if (!verdict.equivalent) {
            auto cex = ordered_json::object();
            for (const auto& name : net_a.inputs()) cex[name] = verdict.counterexample.at(name);
            doc["result"]["counterexample"] = std::move(cex);
            doc["result"]["output_a"] = verdict.output_a;
            doc["result"]["output_b"] = verdict.output_b;
        }
        emit_json(out, doc);
    } else {
        out << "command: verify\n"
            << input_line("netlist a", file_a) << "\n"
            << input_line("netlist b", file_b) << "\n";
        out << "equivalent: " << (verdict.equivalent ? "yes" : "no") << "\n";
        if (!verdict.equivalent) {
            out << "counterexample:";
            for (const auto& name : net_a.inputs())
                out << " " << name << "=" << verdict.counterexample.at(name);
            out << "\n";
            out << "output a: " << verdict.output_a << "\n";
            out << "output b: " << verdict.output_b << "\n";
        }
    }
    return verdict.equivalent ? 0 : 3;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rough-set decision-table analysis and circuit minimization"};
    app.name("reductforge");
    app.require_subcommand(1);

    std::string format_str = "text";
    app.add_option("--format", format_str, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string table_path, net_path, net_a, net_b, assign, rule_spec, attr_list, out_path;
    Value class_value = 0;
    Value fc_class = 0;
    bool with_core = false;

    auto* analyze = app.add_subcommand("analyze", "approximations per decision class");
    analyze->add_option("--table", table_path, "decision table CSV")->required();

    auto* reducts = app.add_subcommand("reducts", "enumerate all reducts");
    reducts->add_option("--table", table_path, "decision table CSV")->required();
    auto* fc_opt = reducts->add_option("--full-coverage", fc_class,
                                       "keep reducts inducing one full-coverage rule for the class");
    reducts->add_flag("--core", with_core, "also report the core");

    auto* rules = app.add_subcommand("rules", "induce rules from an attribute set");
    rules->add_option("--table", table_path, "decision table CSV")->required();
    rules->add_option("attrs", attr_list, "comma-separated attribute names")->required();
    rules->add_option("--class", class_value, "decision class")->required();

    auto* simulate = app.add_subcommand("simulate", "evaluate a netlist");
    simulate->add_option("--net", net_path, "netlist file")->required();
    simulate->add_option("--assign", assign, "one bit per primary input")->required();

    auto* table = app.add_subcommand("table", "emit a netlist's decision table as CSV");
    table->add_option("--net", net_path, "netlist file")->required();

    auto* minimize = app.add_subcommand("minimize", "rebuild a netlist from a decision rule");
    minimize->add_option("--net", net_path, "netlist file")->required();
    minimize->add_option("--rule", rule_spec, "rule spec, e.g. w8=1&w9=0=>1")->required();
    minimize->add_option("--out", out_path, "write the minimized netlist here");

    auto* verify = app.add_subcommand("verify", "exhaustive equivalence check");
    verify->add_option("--net-a", net_a, "first netlist")->required();
    verify->add_option("--net-b", net_b, "second netlist")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const Format fmt = format_str == "json" ? Format::json : Format::text;

    try {
        if (*analyze) return cmd_analyze(table_path, fmt, out);
        if (*reducts)
            return cmd_reducts(table_path,
                               fc_opt->count() ? std::optional<Value>(fc_class) : std::nullopt,
                               with_core, fmt, out);
        if (*rules) return cmd_rules(table_path, attr_list, class_value, fmt, out);
        if (*simulate) return cmd_simulate(net_path, assign, fmt, out);
        if (*table) return cmd_table(net_path, fmt, out);
        if (*minimize) return cmd_minimize(net_path, rule_spec, out_path, fmt, out);
        if (*verify) return cmd_verify(net_a, net_b, fmt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace reductforge::cli
