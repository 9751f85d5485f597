#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "uoce/cli/report.hpp"
#include "uoce/cli/run_config.hpp"
#include "uoce/io/dataset.hpp"
#include "uoce/llm/cache.hpp"

namespace uoce::cli {

enum ExitCode : int { kExitOk = 0, kExitWarnings = 1, kExitInputError = 2 };

struct SweepResult {
  SweepReport report;
  std::size_t backend_requests = 0;  // requests that reached a backend
  std::size_t cache_hits = 0;
  bool any_notes = false;
};

/// Runs every (model, variant) cell, writing each cell's predictions to
/// out_dir/<model>/<variant>.jsonl, and scores it against @p ds.
SweepResult run_sweep(const RunConfig& cfg, const io::DatasetFile& ds,
                      const std::filesystem::path& out_dir, llm::ResponseCache& cache, bool strict);

/// Entry point of the uoce tool. Returns the process exit code: 0 ok,
/// 1 completed with warnings, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uoce::cli
