#pragma once

#include <string>
#include <vector>

namespace trendkit {

/// Batch command-line surface. `args` excludes the program name.
///
/// Subcommands: ingest | trends | ratios | fit | spam-detect | spam-remove |
/// impact | simulate | evaluate | report. Every run writes manifest.json into
/// the output directory first (status "incomplete") and rewrites it last
/// (status "complete" with the produced file list), so a crashed run is
/// visible. Exit codes: 0 success, 1 runtime error, 2 usage error.
int run_command(const std::vector<std::string>& args);

}  // namespace trendkit
