#pragma once

#include <stdexcept>
#include <string>

namespace reductforge {

// Failure categories, mapped to CLI exit codes (usage -> 2, everything else -> 1).
enum class ErrorKind {
    parse,           // malformed text input (CSV, netlist)
    schema,          // structurally invalid table (duplicate attribute, ...)
    lookup,          // unknown attribute / wire name
    domain,          // value outside the operation's domain
    capacity,        // exhaustive-search or input-count cap exceeded
    cycle,           // cyclic netlist wiring
    driver_conflict, // wire driven more than once
    dangling_wire,   // referenced wire never declared
    input,           // bad runtime input (assignment, object row)
    interface,       // incompatible operands (input-set mismatch)
    io,              // unreadable file
    usage,           // bad command line / rule-spec
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace reductforge
