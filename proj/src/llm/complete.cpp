#include "uoce/llm/complete.hpp"

#include <thread>

namespace uoce::llm {

std::string complete(const prompt::PromptText& prompt, const ModelConfig& cfg, ChatBackend& backend,
                     ResponseCache& cache, CallCounters* counters) {
  const std::string key =
      ResponseCache::make_key(cfg.model, prompt.text, cfg.temperature, cfg.max_new_tokens);
  if (auto hit = cache.lookup(key)) {
    if (counters) ++counters->cache_hits;
    return *hit;
  }
  const ChatRequest request{cfg.model, prompt.text, cfg.temperature, cfg.max_new_tokens};
  auto delay = cfg.retry_backoff;
  for (int attempt = 0;; ++attempt) {
    if (counters) ++counters->attempts;
    try {
      std::string reply = backend.complete(request);
      cache.store(key, cfg.model, reply);
      return reply;
    } catch (const BackendError& e) {
      if (!e.retryable() || attempt >= cfg.max_retries) {
        if (attempt == 0 || !e.retryable()) throw;
        throw BackendError(std::string(e.what()) + " (gave up after " +
                               std::to_string(attempt + 1) + " attempts)",
                           false);
      }
    }
    std::this_thread::sleep_for(delay);
    delay *= 2;
  }
}

}  // namespace uoce::llm
