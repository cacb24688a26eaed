#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoseq {

/// Command-line front end. Exit status 0 = success, 1 = check failure or
/// counterexample found, 2 = usage or input error (including budget guard).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace isoseq
