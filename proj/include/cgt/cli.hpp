#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt {

// Exit codes: 0 success / all checks pass, 1 check failed, 2 usage error,
// 3 enumeration budget or order cap exceeded, 4 check inapplicable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cgt
