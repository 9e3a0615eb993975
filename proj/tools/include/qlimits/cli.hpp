#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlimits::cli {

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain/infeasibility errors, 2 on usage errors.
/// Errors are written to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlimits::cli
