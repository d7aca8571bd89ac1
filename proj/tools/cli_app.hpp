#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motfact::cli {

// Runs the command-line front end. Exit codes: 0 success (for `verify`, all
// loops within tolerance), 1 module error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motfact::cli
