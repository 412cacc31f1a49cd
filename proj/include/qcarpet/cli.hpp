#pragma once

#include <iosfwd>

namespace qcarpet {

// Exit codes: 0 success, 1 usage / invalid input / io, 2 numeric accuracy.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qcarpet
