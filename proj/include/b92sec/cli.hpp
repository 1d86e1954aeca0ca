#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace b92 {

// Full command-line front end, separated from main() so tests can drive it.
// Exit codes: 0 success, 1 usage error, 2 input-file error, 3 conjecture
// violation or failed verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace b92
