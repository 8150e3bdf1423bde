#pragma once

#include <ostream>

namespace exactq {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs one command. Exactly one JSON document goes to `out`; summaries and diagnostics go to `err`.
///
/// Verbs: analyze, simulate, verify, construct, fit-collapser. EXACTQ_DCAP and EXACTQ_INTERP_MAX
/// override the default decision-tree cap and interpolation ceiling.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace exactq
