#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irg {

// Command-line entry point, separated from main() so tests can drive it
// in-process. `in` backs the "-" input path. Exit status: 0 when the
// underlying verdict is positive, 1 when negative, 2 on usage or input
// errors. Structured reports go to the selected output; one-line summaries
// and warnings go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace irg
