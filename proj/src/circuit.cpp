#include "reductforge/circuit.hpp"

#include "reductforge/concurrency.hpp"
#include "reductforge/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <thread>

namespace reductforge {
namespace {

bool valid_name(std::string_view name) {
    if (name.empty() || name == "input" || name == "output") return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Not: return "NOT";
        case GateKind::Nand: return "NAND";
        case GateKind::Nor: return "NOR";
        case GateKind::Xor: return "XOR";
        case GateKind::Xnor: return "XNOR";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from(std::string_view name) {
    if (name == "AND") return GateKind::And;
    if (name == "OR") return GateKind::Or;
    if (name == "NOT") return GateKind::Not;
    if (name == "NAND") return GateKind::Nand;
    if (name == "NOR") return GateKind::Nor;
    if (name == "XOR") return GateKind::Xor;
    if (name == "XNOR") return GateKind::Xnor;
    return std::nullopt;
}

int eval_gate(GateKind kind, std::span<const int> inputs) {
    switch (kind) {
        case GateKind::And:
        case GateKind::Nand: {
            int all = 1;
            for (int v : inputs) all &= v;
            return kind == GateKind::And ? all : 1 - all;
        }
        case GateKind::Or:
        case GateKind::Nor: {
            int any = 0;
            for (int v : inputs) any |= v;
            return kind == GateKind::Or ? any : 1 - any;
        }
        case GateKind::Not:
            return 1 - inputs[0];
        case GateKind::Xor:
        case GateKind::Xnor: {
            int parity = 0;
            for (int v : inputs) parity ^= v;
            return kind == GateKind::Xor ? parity : 1 - parity;
        }
    }
    return 0;
}

Netlist::Netlist(std::vector<std::string> inputs, std::vector<Gate> gates, std::string output)
    : inputs_(std::move(inputs)), gates_(std::move(gates)), output_(std::move(output)) {
    for (const auto& name : inputs_)
        if (!valid_name(name)) fail(ErrorKind::parse, "invalid wire name '" + name + "'");
    for (const auto& gate : gates_) {
        if (!valid_name(gate.output))
            fail(ErrorKind::parse, "invalid wire name '" + gate.output + "'");
        for (const auto& in : gate.inputs)
            if (!valid_name(in)) fail(ErrorKind::parse, "invalid wire name '" + in + "'");
        if (gate.kind == GateKind::Not && gate.inputs.size() != 1)
            fail(ErrorKind::schema, "NOT takes exactly 1 input (wire '" + gate.output + "')");
        if (gate.kind != GateKind::Not && gate.inputs.size() < 2)
            fail(ErrorKind::schema, std::string(to_string(gate.kind)) +
                                        " takes at least 2 inputs (wire '" + gate.output + "')");
    }

    std::size_t id = 0;
    for (const auto& name : inputs_)
        if (!wire_ids_.emplace(name, id++).second)
            fail(ErrorKind::driver_conflict, "wire '" + name + "' has multiple drivers");
    for (const auto& gate : gates_)
        if (!wire_ids_.emplace(gate.output, id++).second)
            fail(ErrorKind::driver_conflict, "wire '" + gate.output + "' has multiple drivers");

    gate_input_ids_.reserve(gates_.size());
    for (const auto& gate : gates_) {
        std::vector<std::size_t> ids;
        ids.reserve(gate.inputs.size());
        for (const auto& in : gate.inputs) {
            auto it = wire_ids_.find(in);
            if (it == wire_ids_.end())
                fail(ErrorKind::dangling_wire, "undeclared wire '" + in +
                                                   "' referenced by gate '" + gate.output + "'");
            ids.push_back(it->second);
        }
        gate_input_ids_.push_back(std::move(ids));
    }

    auto out_it = wire_ids_.find(output_);
    if (out_it == wire_ids_.end())
        fail(ErrorKind::dangling_wire, "output names undeclared wire '" + output_ + "'");
    output_wire_ = out_it->second;

    // cycle check + topological order over gate -> gate dependencies
    const std::size_t n_inputs = inputs_.size();
    const std::size_t n_gates = gates_.size();
    std::vector<int> state(n_gates, 0); // 0 new, 1 on path, 2 done
    std::vector<std::size_t> path;
    topo_.reserve(n_gates);
    for (std::size_t start = 0; start < n_gates; ++start) {
        if (state[start] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        state[start] = 1;
        path.push_back(start);
        while (!stack.empty()) {
            auto& [g, k] = stack.back();
            if (k < gate_input_ids_[g].size()) {
                std::size_t wire = gate_input_ids_[g][k++];
                if (wire < n_inputs) continue;
                std::size_t dep = wire - n_inputs;
                if (state[dep] == 1) {
                    auto at = std::find(path.begin(), path.end(), dep);
                    std::string cycle;
                    for (auto it = at; it != path.end(); ++it)
                        cycle += gates_[*it].output + " -> ";
                    cycle += gates_[dep].output;
                    fail(ErrorKind::cycle, "cyclic wiring: " + cycle);
                }
                if (state[dep] == 0) {
                    state[dep] = 1;
                    stack.emplace_back(dep, 0);
                    path.push_back(dep);
                }
            } else {
                state[g] = 2;
                topo_.push_back(g);
                stack.pop_back();
                path.pop_back();
            }
        }
    }
}

Netlist Netlist::parse(std::string_view text) {
    std::vector<std::string> inputs;
    std::vector<Gate> gates;
    std::optional<std::string> output;

    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_number) + ": ";

        if (line.starts_with("input ") || line.starts_with("input\t")) {
            std::string name(trim(line.substr(6)));
            if (!valid_name(name)) fail(ErrorKind::parse, where + "invalid wire name '" + name + "'");
            inputs.push_back(std::move(name));
            continue;
        }
        if (line.starts_with("output ") || line.starts_with("output\t")) {
            if (output) fail(ErrorKind::parse, where + "multiple output declarations");
            std::string name(trim(line.substr(7)));
            if (!valid_name(name)) fail(ErrorKind::parse, where + "invalid wire name '" + name + "'");
            output = std::move(name);
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::parse, where + "cannot parse declaration '" + std::string(line) + "'");
        Gate gate;
        gate.output = std::string(trim(line.substr(0, eq)));

        std::string_view rhs = trim(line.substr(eq + 1));
        auto open = rhs.find('(');
        if (open == std::string_view::npos || rhs.back() != ')')
            fail(ErrorKind::parse, where + "expected <KIND>(<wires>), got '" + std::string(rhs) + "'");
        std::string_view kind_name = trim(rhs.substr(0, open));
        auto kind = gate_kind_from(kind_name);
        if (!kind)
            fail(ErrorKind::parse, where + "unknown gate kind '" + std::string(kind_name) + "'");
        gate.kind = *kind;

        std::string_view args = rhs.substr(open + 1, rhs.size() - open - 2);
        std::size_t pos = 0;
        while (true) {
            auto comma = args.find(',', pos);
            std::string_view arg =
                trim(comma == std::string_view::npos ? args.substr(pos) : args.substr(pos, comma - pos));
            if (arg.empty())
                fail(ErrorKind::parse, where + "empty wire name in gate argument list");
            gate.inputs.emplace_back(arg);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        gates.push_back(std::move(gate));
    }

    if (!output) fail(ErrorKind::parse, "missing output declaration");
    return Netlist(std::move(inputs), std::move(gates), std::move(*output));
}

const std::string& Netlist::wire_name(std::size_t id) const {
    return id < inputs_.size() ? inputs_[id] : gates_[id - inputs_.size()].output;
}

std::optional<std::size_t> Netlist::find_wire(std::string_view name) const {
    auto it = wire_ids_.find(name);
    if (it == wire_ids_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Netlist::eval_all(std::span<const int> input_bits) const {
    std::vector<int> values(wire_count(), 0);
    std::copy(input_bits.begin(), input_bits.end(), values.begin());
    std::vector<int> scratch;
    for (std::size_t g : topo_) {
        scratch.clear();
        for (std::size_t wire : gate_input_ids_[g]) scratch.push_back(values[wire]);
        values[inputs_.size() + g] = eval_gate(gates_[g].kind, scratch);
    }
    return values;
}

std::string Netlist::to_text() const {
    std::string out;
    for (const auto& name : inputs_) {
        out += "input ";
        out += name;
        out += '\n';
    }
    for (const auto& gate : gates_) {
        out += gate.output;
        out += " = ";
        out += to_string(gate.kind);
        out += '(';
        for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
            if (i) out += ", ";
            out += gate.inputs[i];
        }
        out += ")\n";
    }
    out += "output ";
    out += output_;
    out += '\n';
    return out;
}

WireValuation simulate(const Netlist& net, const std::map<std::string, int>& assignment) {
    for (const auto& [name, value] : assignment) {
        auto wire = net.find_wire(name);
        if (!wire || *wire >= net.inputs().size())
            fail(ErrorKind::input, "assignment names unknown input '" + name + "'");
        if (value != 0 && value != 1)
            fail(ErrorKind::input, "assignment value for '" + name + "' must be 0 or 1");
    }
    std::vector<int> bits(net.inputs().size(), 0);
    for (std::size_t i = 0; i < net.inputs().size(); ++i) {
        auto it = assignment.find(net.inputs()[i]);
        if (it == assignment.end())
            fail(ErrorKind::input, "assignment missing input '" + net.inputs()[i] + "'");
        bits[i] = it->second;
    }
    auto values = net.eval_all(bits);
    WireValuation valuation;
    for (std::size_t id = 0; id < net.wire_count(); ++id)
        valuation.emplace(net.wire_name(id), values[id]);
    return valuation;
}

DecisionTable build_decision_table(const Netlist& net, std::size_t input_cap) {
    const std::size_t k = net.inputs().size();
    if (k == 0) fail(ErrorKind::domain, "netlist has no primary inputs");
    if (k > input_cap)
        fail(ErrorKind::capacity, "input count " + std::to_string(k) + " exceeds cap (" +
                                      std::to_string(input_cap) + ")");

    std::vector<std::string> attrs;
    std::vector<std::size_t> attr_wires;
    for (std::size_t id = 0; id < net.wire_count(); ++id) {
        if (id == net.output_wire()) continue;
        attrs.push_back(net.wire_name(id));
        attr_wires.push_back(id);
    }

    std::vector<std::vector<Value>> rows;
    rows.reserve(std::size_t{1} << k);
    std::vector<int> bits(k);
    for (std::size_t assignment = 0; assignment < (std::size_t{1} << k); ++assignment) {
        for (std::size_t i = 0; i < k; ++i) bits[i] = assignment >> (k - 1 - i) & 1;
        auto values = net.eval_all(bits);
        std::vector<Value> row;
        row.reserve(attr_wires.size() + 1);
        for (std::size_t id : attr_wires) row.push_back(values[id]);
        row.push_back(values[net.output_wire()]);
        rows.push_back(std::move(row));
    }
    return DecisionTable(std::move(attrs), net.output(), rows);
}

namespace {

void check_binary_rule(const DecisionRule& rule) {
    if (rule.descriptors.empty()) fail(ErrorKind::domain, "rule has no descriptors");
    std::set<std::string> names;
    for (const auto& d : rule.descriptors) {
        if (!names.insert(d.attribute).second)
            fail(ErrorKind::domain, "duplicate attribute '" + d.attribute + "' in rule");
        if (d.value != 0 && d.value != 1)
            fail(ErrorKind::domain,
                 "descriptor value must be 0 or 1 (attribute '" + d.attribute + "')");
    }
}

std::string unused_name(const std::string& base, std::set<std::string>& used) {
    std::string name = base;
    for (int suffix = 1; used.count(name); ++suffix)
        name = base + "_" + std::to_string(suffix);
    used.insert(name);
    return name;
}

} // namespace

Netlist synthesize_from_rule(const DecisionRule& rule) {
    check_binary_rule(rule);
    std::vector<std::string> inputs;
    std::set<std::string> used;
    for (const auto& d : rule.descriptors) {
        inputs.push_back(d.attribute);
        used.insert(d.attribute);
    }

    std::vector<Gate> gates;
    std::vector<std::string> literals;
    for (const auto& d : rule.descriptors) {
        if (d.value == 1) {
            literals.push_back(d.attribute);
        } else {
            std::string name = unused_name("n_" + d.attribute, used);
            gates.push_back({name, GateKind::Not, {d.attribute}});
            literals.push_back(std::move(name));
        }
    }
    std::string out_wire = literals.front();
    if (literals.size() > 1) {
        out_wire = unused_name("out", used);
        gates.push_back({out_wire, GateKind::And, std::move(literals)});
    }
    return Netlist(std::move(inputs), std::move(gates), std::move(out_wire));
}

Netlist minimize_netlist(const Netlist& net, const DecisionRule& rule) {
    check_binary_rule(rule);
    if (rule.decision != 0 && rule.decision != 1)
        fail(ErrorKind::domain, "rule decision must be 0 or 1, got " +
                                    std::to_string(rule.decision));
    std::vector<std::size_t> attr_wires;
    for (const auto& d : rule.descriptors) {
        auto wire = net.find_wire(d.attribute);
        if (!wire)
            fail(ErrorKind::lookup,
                 "rule attribute '" + d.attribute + "' is not a wire of the netlist");
        attr_wires.push_back(*wire);
    }

    // transitive fan-in cones of the rule's attribute wires
    std::vector<bool> in_cone(net.gate_count(), false);
    std::vector<std::size_t> pending = attr_wires;
    while (!pending.empty()) {
        std::size_t wire = pending.back();
        pending.pop_back();
        if (wire < net.inputs().size()) continue;
        std::size_t g = wire - net.inputs().size();
        if (in_cone[g]) continue;
        in_cone[g] = true;
        for (const auto& in : net.gates()[g].inputs) pending.push_back(*net.find_wire(in));
    }

    std::vector<Gate> gates;
    std::set<std::string> used(net.inputs().begin(), net.inputs().end());
    for (std::size_t g = 0; g < net.gate_count(); ++g)
        if (in_cone[g]) {
            gates.push_back(net.gates()[g]);
            used.insert(net.gates()[g].output);
        }

    // Combiner. For a class-1 rule the output is the match conjunction
    // itself; for a class-0 rule it is the complement, realized through
    // De Morgan as an OR over complemented literals.
    const bool match_polarity = rule.decision == 1;
    std::vector<std::string> literals;
    for (const auto& d : rule.descriptors) {
        const bool plain = match_polarity ? d.value == 1 : d.value == 0;
        if (plain) {
            literals.push_back(d.attribute);
        } else {
            std::string name = unused_name("n_" + d.attribute, used);
            gates.push_back({name, GateKind::Not, {d.attribute}});
            literals.push_back(std::move(name));
        }
    }
    std::string out_wire = literals.front();
    if (literals.size() > 1) {
        out_wire = unused_name(net.output(), used);
        gates.push_back({out_wire, match_polarity ? GateKind::And : GateKind::Or,
                         std::move(literals)});
    }

    Netlist candidate(net.inputs(), std::move(gates), std::move(out_wire));
    if (candidate.gate_count() > net.gate_count()) return net;
    return candidate;
}

EquivalenceResult check_equivalence(const Netlist& a, const Netlist& b,
                                    std::size_t input_cap, std::size_t workers) {
    auto sorted_a = a.inputs();
    auto sorted_b = b.inputs();
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) fail(ErrorKind::interface, "primary input sets differ");

    const std::size_t k = a.inputs().size();
    if (k > input_cap)
        fail(ErrorKind::capacity, "combined input count " + std::to_string(k) +
                                      " exceeds cap (" + std::to_string(input_cap) + ")");

    std::vector<std::size_t> b_position(k);
    for (std::size_t i = 0; i < k; ++i)
        b_position[i] = static_cast<std::size_t>(
            std::find(b.inputs().begin(), b.inputs().end(), a.inputs()[i]) - b.inputs().begin());

    const std::size_t total = std::size_t{1} << k;
    auto outputs_at = [&](std::size_t assignment) {
        std::vector<int> bits_a(k), bits_b(k);
        for (std::size_t i = 0; i < k; ++i) {
            int bit = assignment >> (k - 1 - i) & 1;
            bits_a[i] = bit;
            bits_b[b_position[i]] = bit;
        }
        return std::pair{a.eval_all(bits_a)[a.output_wire()],
                         b.eval_all(bits_b)[b.output_wire()]};
    };

    const std::size_t n_workers = std::min(worker_count(workers), total);
    std::atomic<std::size_t> first_mismatch{total};
    auto scan = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t assignment = lo; assignment < hi; ++assignment) {
            if (first_mismatch.load(std::memory_order_relaxed) <= assignment) return;
            auto [out_a, out_b] = outputs_at(assignment);
            if (out_a != out_b) {
                // keep the smallest mismatching assignment
                std::size_t seen = first_mismatch.load(std::memory_order_relaxed);
                while (assignment < seen &&
                       !first_mismatch.compare_exchange_weak(seen, assignment)) {
                }
                return;
            }
        }
    };
    if (n_workers <= 1 || total < 2048) {
        scan(0, total);
    } else {
        const std::size_t chunk = (total + n_workers - 1) / n_workers;
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < n_workers; ++w)
            threads.emplace_back(scan, w * chunk, std::min(total, (w + 1) * chunk));
        for (auto& t : threads) t.join();
    }

    EquivalenceResult result;
    std::size_t at = first_mismatch.load();
    if (at == total) return result;
    result.equivalent = false;
    auto [out_a, out_b] = outputs_at(at);
    result.output_a = out_a;
    result.output_b = out_b;
    for (std::size_t i = 0; i < k; ++i)
        result.counterexample.emplace(a.inputs()[i], static_cast<int>(at >> (k - 1 - i) & 1));
    return result;
}

} // namespace reductforge
