#pragma once

#include <iosfwd>

namespace starcover {

/// Entry point of the `starcover` tool. Exit codes: 0 success, 1 infeasible
/// input, failed verification or I/O failure, 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace starcover
