#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace uoce::llm {

struct CacheEntry {
  std::string key;
  std::string model;
  std::string reply;
  std::string timestamp;  // UTC, ISO 8601
};

/// Reply cache keyed by content hash, optionally persisted as append-only
/// JSON lines. The first entry stored under a key wins; later stores of the
/// same key are ignored.
class ResponseCache {
 public:
  /// Memory only.
  ResponseCache() = default;
  /// Loads @p file when it exists; new entries are appended to it.
  explicit ResponseCache(std::filesystem::path file);

  ResponseCache(const ResponseCache&) = delete;
  ResponseCache& operator=(const ResponseCache&) = delete;

  /// SHA-256 (hex) over model, prompt, temperature and max_new_tokens.
  static std::string make_key(std::string_view model, std::string_view prompt, double temperature,
                              int max_new_tokens);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, std::string_view model, std::string_view reply);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::optional<std::filesystem::path> file_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace uoce::llm
