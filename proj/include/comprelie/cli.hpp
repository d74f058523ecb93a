#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comprelie {

// Full command-line driver. Writes one JSON document to `out` on success
// and a one-line diagnostic to `err` on failure. Returns the process exit
// code: 0 computed (including negative verdicts), 1 bad input or usage,
// 2 broken internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comprelie
