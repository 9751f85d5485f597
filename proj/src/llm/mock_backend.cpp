#include "uoce/llm/mock_backend.hpp"

#include <thread>

#include <nlohmann/json.hpp>

#include "uoce/io/dataset.hpp"
#include "uoce/prompting/prompt.hpp"

namespace uoce::llm {

MockBackend::MockBackend(std::vector<MockReply> replies, std::optional<std::string> fallback,
                         std::chrono::milliseconds latency)
    : replies_(std::move(replies)), fallback_(std::move(fallback)), latency_(latency) {}

std::unique_ptr<MockBackend> MockBackend::from_file(const std::filesystem::path& path) {
  const std::string text = io::read_text_file(path);
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<MockReply> replies;
    for (const auto& r : doc.at("replies")) {
      replies.push_back({r.at("query").get<std::string>(), r.at("reply").get<std::string>(),
                         r.value("prompt_contains", "")});
    }
    std::optional<std::string> fallback;
    if (doc.contains("default")) fallback = doc["default"].get<std::string>();
    const auto latency = std::chrono::milliseconds(doc.value("latency_ms", 0));
    return std::make_unique<MockBackend>(std::move(replies), std::move(fallback), latency);
  } catch (const nlohmann::json::exception& e) {
    throw io::InputError(path.string() + ": invalid mock reply file: " + e.what());
  }
}

std::string MockBackend::complete(const ChatRequest& request) {
  ++requests_;
  const std::size_t now = ++in_flight_;
  std::size_t seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }
  struct Leave {
    std::atomic<std::size_t>& n;
    ~Leave() { --n; }
  } leave{in_flight_};

  if (latency_.count() > 0) std::this_thread::sleep_for(latency_);
  const auto query = prompt::extract_query(request.prompt);
  for (const MockReply& r : replies_) {
    if (query && *query == r.query &&
        (r.prompt_contains.empty() || request.prompt.find(r.prompt_contains) != std::string::npos))
      return r.reply;
  }
  if (fallback_) return *fallback_;
  throw BackendError("mock backend has no reply for query: " + query.value_or("<none>"), false);
}

}  // namespace uoce::llm
