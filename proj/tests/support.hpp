#pragma once

#include "reductforge/circuit.hpp"
#include "reductforge/error.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace support {

inline std::string fixture_path(const std::string& name) {
    return std::string(REDUCTFORGE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs `fn`, which must throw reductforge::Error, and hands the error back.
template <typename Fn>
inline reductforge::Error capture_error(Fn&& fn) {
    try {
        fn();
    } catch (const reductforge::Error& e) {
        return e;
    }
    return reductforge::Error(reductforge::ErrorKind::domain, "<no error thrown>");
}

// Random acyclic netlist: 1..6 inputs, 1..12 gates over earlier wires,
// output = last gate. Constant-output circuits are resampled; their only
// full-coverage rule has zero descriptors and no gate realization.
inline reductforge::Netlist random_netlist(std::mt19937& rng) {
    using namespace reductforge;
    std::uniform_int_distribution<int> inputs_dist(1, 6), gates_dist(1, 12), kind_dist(0, 6),
        arity_dist(0, 2);
    while (true) {
        const int k = inputs_dist(rng);
        const int g = gates_dist(rng);
        std::vector<std::string> inputs;
        for (int i = 0; i < k; ++i) inputs.push_back(std::string(1, static_cast<char>('a' + i)));
        std::vector<Gate> gates;
        std::size_t wires = inputs.size();
        for (int i = 0; i < g; ++i) {
            auto kind = static_cast<GateKind>(kind_dist(rng));
            const int arity = kind == GateKind::Not ? 1 : (arity_dist(rng) == 2 ? 3 : 2);
            std::uniform_int_distribution<std::size_t> wire_dist(0, wires - 1);
            std::vector<std::string> ins;
            for (int a = 0; a < arity; ++a) {
                std::size_t w = wire_dist(rng);
                ins.push_back(w < inputs.size() ? inputs[w] : gates[w - inputs.size()].output);
            }
            gates.push_back({"g" + std::to_string(i + 1), kind, std::move(ins)});
            ++wires;
        }
        Netlist net(inputs, gates, gates.back().output);

        bool saw[2] = {false, false};
        std::vector<int> bits(static_cast<std::size_t>(k));
        for (std::size_t assignment = 0; assignment < (std::size_t{1} << k); ++assignment) {
            for (int i = 0; i < k; ++i) bits[i] = assignment >> (k - 1 - i) & 1;
            saw[net.eval_all(bits)[net.output_wire()]] = true;
        }
        if (saw[0] && saw[1]) return net;
    }
}

} // namespace support
