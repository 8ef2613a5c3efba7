#pragma once

#include <ostream>

#include "clhopf/cli/config.hpp"
#include "clhopf/cli/emit.hpp"

namespace clhopf::cli {

// Runs every command for every specialization (or once when there is none).
// Exit code: 0 all asserted checks pass, 2 a claim failed or an invariant
// broke, 1 bad input. Reports produced before an error are kept.
RunResult run(const JobConfig& config);

// run() plus writing the rendered report to config.output (stdout when
// empty). Returns the exit code.
int run_and_write(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace clhopf::cli
