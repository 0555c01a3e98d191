#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birkhoff::cli {

/// Runs one command line (args excludes the program name). Results go to
/// `out` or to the files named by the flags; failures print a single line
/// "error: <category>: <message>" to `err` and return nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace birkhoff::cli
