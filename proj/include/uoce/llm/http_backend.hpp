#pragma once

#include <atomic>
#include <string>

#include "uoce/llm/backend.hpp"

namespace uoce::llm {

/// POSTs {base}/chat/completions with model, messages, temperature and
/// max_tokens, and returns choices[0].message.content.
///  - 401/403: AuthError naming cfg.api_key_env
///  - 408/429/5xx and transport failures: retryable BackendError
///  - other non-2xx or a malformed body: non-retryable BackendError
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(ModelConfig cfg);

  std::string complete(const ChatRequest& request) override;
  std::size_t request_count() const override { return requests_.load(); }

 private:
  ModelConfig cfg_;
  std::string scheme_host_port_;
  std::string base_path_;
  std::atomic<std::size_t> requests_{0};
};

}  // namespace uoce::llm
