#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace uoce::llm {

struct ModelConfig {
  std::string name;      // label used in reports; defaults to model
  std::string endpoint;  // OpenAI-compatible base URL, or "mock:<replies.json>"
  std::string model;     // model id sent with each request
  std::string api_key_env = "OPENAI_API_KEY";  // empty: send no credential
  double temperature = 0.0;
  int max_new_tokens = 512;
  std::chrono::milliseconds timeout{60000};
  int max_retries = 2;
  std::chrono::milliseconds retry_backoff{500};  // doubled after each failed attempt
  std::size_t max_concurrency = 4;

  std::string label() const { return name.empty() ? model : name; }
  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ChatRequest {
  std::string model;
  std::string prompt;  // sent as a single user message
  double temperature = 0.0;
  int max_tokens = 512;
};

class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

/// Rejected credentials. Never retried; the message names the environment
/// variable, not its value.
class AuthError : public BackendError {
 public:
  explicit AuthError(const std::string& what) : BackendError(what, false) {}
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  /// One request, no retries. Throws BackendError.
  virtual std::string complete(const ChatRequest& request) = 0;
  /// Requests that reached the backend, cache hits excluded.
  virtual std::size_t request_count() const = 0;
};

/// HttpBackend for URLs, MockBackend for "mock:<path>".
std::unique_ptr<ChatBackend> make_backend(const ModelConfig& cfg);

}  // namespace uoce::llm
