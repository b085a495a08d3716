#pragma once

#include <iosfwd>

namespace feclab {

// Exit codes: 0 success, 1 I/O failure, 2 configuration error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace feclab
