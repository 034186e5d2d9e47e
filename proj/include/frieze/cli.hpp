#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the input fails validation, 2 on usage or parse errors; errors go
/// to `err` as one-line JSON.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace frieze::cli
