#include "uoce/llm/backend.hpp"

#include <cmath>

#include "uoce/llm/http_backend.hpp"
#include "uoce/llm/mock_backend.hpp"

namespace uoce::llm {

void ModelConfig::validate() const {
  if (endpoint.empty()) throw ConfigError("model '" + label() + "': endpoint is empty");
  if (model.empty() && endpoint.rfind("mock:", 0) != 0)
    throw ConfigError("model config: model name is empty");
  if (!std::isfinite(temperature) || temperature < 0)
    throw ConfigError("model '" + label() + "': temperature must be >= 0");
  if (max_new_tokens <= 0) throw ConfigError("model '" + label() + "': max_new_tokens must be > 0");
  if (max_retries < 0) throw ConfigError("model '" + label() + "': max_retries must be >= 0");
  if (max_concurrency == 0)
    throw ConfigError("model '" + label() + "': max_concurrency must be >= 1");
  if (timeout.count() <= 0) throw ConfigError("model '" + label() + "': timeout must be > 0");
}

std::unique_ptr<ChatBackend> make_backend(const ModelConfig& cfg) {
  cfg.validate();
  if (cfg.endpoint.rfind("mock:", 0) == 0)
    return MockBackend::from_file(cfg.endpoint.substr(5));
  return std::make_unique<HttpBackend>(cfg);
}

}  // namespace uoce::llm
