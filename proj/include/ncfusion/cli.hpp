#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncfusion::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2, // usage, parse, file and validation errors
    kBound = 3, // enumeration or matrix size bound exceeded
};

// Runs one command; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ncfusion::cli
