#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbd::cli {

// Dispatches one invocation. Arguments exclude the program name.
// Exit status: 0 success, 1 verification failure, 2 input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rbd::cli
