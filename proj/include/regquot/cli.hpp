#pragma once

#include <ostream>

namespace regquot {

/// Entry point of the regquot command line tool. Exit codes: 0 success,
/// 2 input error, 3 mathematical failure or disagreement.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regquot
