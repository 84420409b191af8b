#pragma once

#include "reductforge/decision_table.hpp"
#include "reductforge/rules.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reductforge {

enum class GateKind { And, Or, Not, Nand, Nor, Xor, Xnor };

std::string_view to_string(GateKind kind);
std::optional<GateKind> gate_kind_from(std::string_view name);

int eval_gate(GateKind kind, std::span<const int> inputs);

struct Gate {
    std::string output;
    GateKind kind = GateKind::And;
    std::vector<std::string> inputs;

    bool operator==(const Gate&) const = default;
};

// Acyclic single-driver gate graph over named wires with one designated
// output. Wires are ordered: primary inputs first, then gate outputs, both
// in declaration order. Immutable once constructed.
class Netlist {
public:
    Netlist(std::vector<std::string> inputs, std::vector<Gate> gates, std::string output);

    // Text format, one declaration per line:
    //   input <name>
    //   <name> = <KIND>(<in1>, <in2>, ...)
    //   output <name>
    // '#' starts a comment. Gate declarations may reference wires declared
    // on later lines as long as the wiring stays acyclic.
    static Netlist parse(std::string_view text);

    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::string& output() const { return output_; }
    std::size_t gate_count() const { return gates_.size(); }

    std::size_t wire_count() const { return inputs_.size() + gates_.size(); }
    const std::string& wire_name(std::size_t id) const;
    std::optional<std::size_t> find_wire(std::string_view name) const;
    std::size_t output_wire() const { return output_wire_; }

    // Values of every wire for one primary-input assignment, indexed by
    // wire id (inputs first, then gate outputs, declaration order).
    std::vector<int> eval_all(std::span<const int> input_bits) const;

    std::string to_text() const;

    bool operator==(const Netlist& other) const {
        return inputs_ == other.inputs_ && gates_ == other.gates_ && output_ == other.output_;
    }

private:
    std::vector<std::string> inputs_;
    std::vector<Gate> gates_;
    std::string output_;
    // compiled for evaluation
    std::map<std::string, std::size_t, std::less<>> wire_ids_;
    std::vector<std::vector<std::size_t>> gate_input_ids_;
    std::vector<std::size_t> topo_; // gate indices in dependency order
    std::size_t output_wire_ = 0;
};

// Wire name -> bit, for every wire of the netlist.
using WireValuation = std::map<std::string, int>;

// Evaluates the netlist under one assignment of the primary inputs. The
// assignment must cover exactly the primary inputs with bit values.
WireValuation simulate(const Netlist& net, const std::map<std::string, int>& assignment);

inline constexpr std::size_t kDefaultInputCap = 16;

// Exhaustive truth table as a decision table: one row per primary-input
// combination in binary counting order (first input is the most
// significant bit); condition attributes are all wires except the output;
// the decision column is the output wire.
DecisionTable build_decision_table(const Netlist& net,
                                   std::size_t input_cap = kDefaultInputCap);

// Netlist computing the rule's match predicate over the rule's attributes
// as primary inputs: NOT gates for (w=0) descriptors feeding one n-ary AND
// (single-descriptor rules need no AND). Descriptor values must be bits.
Netlist synthesize_from_rule(const DecisionRule& rule);

// Rebuilds `net` as the fan-in cones of the rule's attribute wires plus a
// combiner that realizes the output from those wires; never returns a
// netlist with more gates than `net` (the input is returned unchanged when
// the rebuild would not shrink past it). The rule must stem from
// build_decision_table(net) with certainty 1 and coverage 1 for the result
// to be equivalent.
Netlist minimize_netlist(const Netlist& net, const DecisionRule& rule);

struct EquivalenceResult {
    bool equivalent = true;
    std::map<std::string, int> counterexample; // empty when equivalent
    int output_a = 0;
    int output_b = 0;
};

// Exhaustive comparison over all primary-input assignments. On mismatch
// reports the first failing assignment in binary counting order (over
// `a`'s input declaration order). `workers` = 0 defers to
// REDUCT_FORGE_THREADS / hardware; any worker count yields identical
// results.
EquivalenceResult check_equivalence(const Netlist& a, const Netlist& b,
                                    std::size_t input_cap = kDefaultInputCap,
                                    std::size_t workers = 0);

} // namespace reductforge
