#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlb::cli {

// args excludes the program name. Exit codes: 0 the checked statement holds,
// 1 mathematical failure (report carries the witness), 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlb::cli
