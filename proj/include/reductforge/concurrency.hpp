#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>

namespace reductforge {

// Worker count for shardable exhaustive scans. `requested` wins when
// nonzero; otherwise the REDUCT_FORGE_THREADS environment variable caps
// the count (0 or unset or unparsable = hardware auto).
inline std::size_t worker_count(std::size_t requested = 0) {
    std::size_t n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("REDUCT_FORGE_THREADS")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && end != env) n = static_cast<std::size_t>(v);
        }
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

} // namespace reductforge
