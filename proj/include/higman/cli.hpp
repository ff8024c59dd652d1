#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace higman {

/// args excludes the program name. Exit codes: 0 success, 1 verification
/// failure or a negative answer, 2 usage error, 3 Unknown membership,
/// 4 error raised by the library.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace higman
