#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bijenum::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 on success, 1 on usage errors, 2 on domain errors
/// (invalid strings, parse, framing, out-of-range). Errors print to `err`
/// only; successful output is line-oriented ASCII on `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bijenum::cli
