#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferro::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kFeatureAbsent = 3,
    kCompensationOutOfRange = 4,
    kInversionFailure = 5,
    kNumericalFailure = 6,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Subcommands: simulate, ingest, compensate, invert, pipeline.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ferro::cli
