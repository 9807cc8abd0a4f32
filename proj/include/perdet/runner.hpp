#pragma once

#include "perdet/config.hpp"
#include "perdet/report.hpp"

#include <vector>

namespace perdet {

// Execute one check; engine errors are embedded in the report, not thrown.
CheckReport run_check(const CheckConfig& config);

// Worker-pool batch; report order follows config order.
std::vector<CheckReport> run_checks(const std::vector<CheckConfig>& configs,
                                    const RunOptions& options);

// Built-in named examples (the acceptance catalog).
std::vector<CheckConfig> builtin_catalog();

// Internal 10-connection monodromy catalog used by mode = "catalog".
std::vector<LogConnection> monodromy_catalog();

}  // namespace perdet
