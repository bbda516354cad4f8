#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcap {

// Command-line entry point. Exit codes: 0 success, 2 usage error,
// 3 solver non-convergence.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace qcap
