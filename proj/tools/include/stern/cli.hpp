#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stern {

// args excludes the program name. Returns 0 on success, 1 for domain errors
// (stern::Error), 2 for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stern
