#pragma once

#include <iosfwd>

namespace klab {

// Exit codes: 0 all requested checks pass, 2 any Fail, 3 Exhausted without Fail, 64 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace klab
