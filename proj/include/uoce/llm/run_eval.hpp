#pragma once

#include <cstddef>
#include <stdexcept>

#include "uoce/io/dataset.hpp"
#include "uoce/io/predictions.hpp"
#include "uoce/llm/backend.hpp"
#include "uoce/llm/cache.hpp"
#include "uoce/prompting/prompt.hpp"

namespace uoce::llm {

struct RunOptions {
  bool strict = false;
};

struct RunStats {
  std::size_t sentences = 0;
  std::size_t cache_hits = 0;
  std::size_t backend_calls = 0;  // retries included
  std::size_t failed = 0;         // sentences whose request failed
};

/// Raised when no sentence could be completed.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prompts the model once per sentence (up to cfg.max_concurrency at a
/// time) and parses each reply. Records follow dataset order. A failed
/// request leaves an empty tuple list and an error diagnostic on that
/// record; if every request fails RunError is thrown.
io::PredictionsFile run_eval(const io::DatasetFile& ds, const prompt::PromptConfig& prompt_cfg,
                             const ModelConfig& model_cfg, ChatBackend& backend,
                             ResponseCache& cache, const RunOptions& options = {},
                             RunStats* stats = nullptr);

}  // namespace uoce::llm
