#pragma once

#include <ostream>

namespace bbsp {

// Exit codes: 0 ok, 2 usage, 3 degenerate spec, 4 numeric contract violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bbsp
