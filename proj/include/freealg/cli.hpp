#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freealg {

// exit codes: 0 success, 1 domain error, 2 usage error
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace freealg
