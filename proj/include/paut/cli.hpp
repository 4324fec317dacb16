#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace paut {

// Exit status: 0 success, 1 domain error (pole, not invertible, precondition), 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paut
