#pragma once
#include <ostream>

namespace posrep {

// exit codes: 0 success, 1 identity violation or failed check, 2 usage or input error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posrep
