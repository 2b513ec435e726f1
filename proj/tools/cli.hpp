#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doflab::cli {

enum ExitCode : int { ok = 0, usage = 2, failed = 3 };

// args excludes the program name. Output goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doflab::cli
