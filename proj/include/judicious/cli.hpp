#pragma once

#include <string>

#include "judicious/oracle.hpp"
#include "judicious/solver.hpp"

namespace judicious {

// Stable machine-readable certificate rendering:
//   {"r", "m", "threshold": {"num","den"}, "classes": [[vertex ids]...],
//    "coverage": [ints], "min_coverage": int}
std::string certificate_to_json(const Certificate& cert);

// Aligned-text rendering for humans.
std::string certificate_to_text(const Certificate& cert);

std::string gap_report_to_json(const BruteForceResult& best, const GapReport& rep);
std::string gap_report_to_text(const BruteForceResult& best, const GapReport& rep);

// Entry point behind the jpart binary.  Exit codes:
//   0 success / certificate valid
//   1 verification failed
//   2 usage or input error
//   3 internal logic error (diagnostic dump on stderr)
//   4 oracle budget exceeded
int cli_main(int argc, char** argv);

}  // namespace judicious
