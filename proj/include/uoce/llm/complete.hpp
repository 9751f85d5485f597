#pragma once

#include <atomic>
#include <cstddef>
#include <string>

#include "uoce/llm/backend.hpp"
#include "uoce/llm/cache.hpp"
#include "uoce/prompting/prompt.hpp"

namespace uoce::llm {

struct CallCounters {
  std::atomic<std::size_t> cache_hits{0};
  std::atomic<std::size_t> attempts{0};  // backend calls, retries included
};

/// Cached reply when present; otherwise calls @p backend, retrying
/// retryable failures up to cfg.max_retries times with exponential backoff,
/// and stores the reply. AuthError and non-retryable errors propagate at once.
std::string complete(const prompt::PromptText& prompt, const ModelConfig& cfg, ChatBackend& backend,
                     ResponseCache& cache, CallCounters* counters = nullptr);

}  // namespace uoce::llm
