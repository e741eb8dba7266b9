#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mostset::cli {

/// Runs one CLI invocation. Results go to `out`, diagnostics to `err`.
/// Exit status: 0 on success, 1 on domain errors (empty collection,
/// missing certificate, finite universe, ...), 2 on parse/IO errors
/// (unknown subcommand, malformed JSON, alphabet mismatch, unreadable
/// file). Output for identical inputs is byte-identical across runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mostset::cli
