#pragma once

#include <string>
#include <vector>

namespace hypersync {

/// Entry point behind the hypersync binary, callable in-process for tests.
/// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 runtime failure.
/// A diverging simulation is a reported outcome, not an error.
int cli_main(const std::vector<std::string>& args);

}  // namespace hypersync
