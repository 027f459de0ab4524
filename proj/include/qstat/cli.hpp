#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace qstat {

// Full command dispatch, streams injected so tests can drive it in-process.
// args excludes the program name; in is the data source for `estimate`
// (nullptr means std::cin). Returns the process exit code:
//   0 success, 1 verification failure, 2 usage/domain error, 3 non-convergence.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err,
             std::istream* in = nullptr);

} // namespace qstat
