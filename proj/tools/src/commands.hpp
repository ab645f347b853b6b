#pragma once

#include "options.hpp"

namespace cli {

int cmd_quotients(SweepConfig cfg);
int cmd_a1_table(SweepConfig cfg);
int cmd_fem_errors(SweepConfig cfg);
int cmd_validate();

}  // namespace cli
