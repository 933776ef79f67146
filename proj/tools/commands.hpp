#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace germlab::cli {

enum ExitCode { Ok = 0, InputError = 1, Uncertified = 2, Mismatch = 3 };

// Runs one command line; the report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germlab::cli
