#pragma once

#include "app/config.hpp"
#include "report/document.hpp"

namespace tauratio::app {

// Validates the configuration and runs the selected subcommand. Errors are
// thrown (ConfigError, DomainError, BudgetError, ...); assertion failures
// are recorded in the document instead.
report::Document run(const RunConfig& config);

}  // namespace tauratio::app
