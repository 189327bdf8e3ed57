#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homcat {

// Runs one CLI invocation. Exit codes: 0 success, 1 check failed (a
// negative verdict or counterexample), 2 input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcat
