#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcdkit {

// Command-line front end, stream-driven so tests can run it in process.
// args excludes the program name.  Exit codes:
//   0  property holds / verdict positive / no counterexample
//   3  property fails / verdict negative / counterexample found
//   1  usage or input error
//   2  refusal (instance too large, tolerance mode where exactness is required)
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace rcdkit
