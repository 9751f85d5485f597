#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uoce/llm/backend.hpp"

namespace uoce::llm {

struct MockReply {
  std::string query;            // matched against the prompt's Query block
  std::string reply;
  std::string prompt_contains;  // optional extra filter on the whole prompt
};

/// Canned replies for offline runs and tests. Counts requests and the
/// largest number of requests in flight at once.
class MockBackend : public ChatBackend {
 public:
  MockBackend(std::vector<MockReply> replies, std::optional<std::string> fallback = std::nullopt,
              std::chrono::milliseconds latency = std::chrono::milliseconds{0});

  /// {"replies": [{"query", "reply", "prompt_contains"?}], "default"?: text,
  ///  "latency_ms"?: n}
  static std::unique_ptr<MockBackend> from_file(const std::filesystem::path& path);

  std::string complete(const ChatRequest& request) override;
  std::size_t request_count() const override { return requests_.load(); }
  std::size_t max_in_flight() const { return max_in_flight_.load(); }

 private:
  std::vector<MockReply> replies_;
  std::optional<std::string> fallback_;
  std::chrono::milliseconds latency_;
  std::atomic<std::size_t> requests_{0};
  std::atomic<std::size_t> in_flight_{0};
  std::atomic<std::size_t> max_in_flight_{0};
};

}  // namespace uoce::llm
