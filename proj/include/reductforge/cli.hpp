#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reductforge::cli {

// Runs one subcommand; `args` excludes the program name. The report goes
// to `out`, single-line errors to `err`. Returns the process exit status:
// 0 success, 1 domain error, 2 usage error, 3 verify found a
// counterexample.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace reductforge::cli
