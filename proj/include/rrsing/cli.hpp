#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrsing {

/// Exit codes: 0 success, 1 mathematical check failure, 2 usage error,
/// 3 budget exhaustion with partial results.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rrsing
