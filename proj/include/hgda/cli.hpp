#pragma once

#include <ostream>

namespace hgda {

/// Entry point of the `hgda` tool. Exit codes: 0 success, 1 input or usage
/// error, 2 unconverged result under --strict.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgda
