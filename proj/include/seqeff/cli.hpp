#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqeff {

// Exit codes: 0 every row behaved as declared, 1 mismatch, 2 usage, config or
// capability error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqeff
