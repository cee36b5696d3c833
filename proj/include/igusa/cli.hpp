#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace igusa::cli {

/// Runs one CLI invocation.  Output JSON goes to `out`, usage errors to
/// `err`.  Exit codes: 0 success, 1 domain error (machine-readable error
/// JSON on stdout), 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igusa::cli
