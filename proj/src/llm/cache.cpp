#include "uoce/llm/cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uoce/io/dataset.hpp"

namespace uoce::llm {

using nlohmann::json;

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path file) : file_(std::move(file)) {
  if (!std::filesystem::exists(*file_)) return;
  const std::string text = io::read_text_file(*file_);
  std::size_t start = 0, line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const json j = json::parse(line);
      CacheEntry e{j.at("key").get<std::string>(), j.value("model", ""),
                   j.at("reply").get<std::string>(), j.value("timestamp", "")};
      entries_.emplace(e.key, std::move(e));
    } catch (const json::exception& ex) {
      throw io::InputError(file_->string() + ": line " + std::to_string(line_no) +
                           ": corrupt cache entry: " + ex.what());
    }
  }
}

std::string ResponseCache::make_key(std::string_view model, std::string_view prompt,
                                    double temperature, int max_new_tokens) {
  char temp[32];
  std::snprintf(temp, sizeof temp, "%.17g", temperature);
  const json material = json::array({model, prompt, temp, max_new_tokens});
  return sha256_hex(material.dump());
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.reply;
}

void ResponseCache::store(const std::string& key, std::string_view model, std::string_view reply) {
  std::lock_guard lock(mu_);
  if (entries_.contains(key)) return;
  CacheEntry e{key, std::string(model), std::string(reply), utc_now()};
  if (file_) {
    if (file_->has_parent_path()) std::filesystem::create_directories(file_->parent_path());
    std::ofstream out(*file_, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot append to cache file '" + file_->string() + "'");
    const json line{{"key", e.key}, {"model", e.model}, {"reply", e.reply}, {"timestamp", e.timestamp}};
    out << line.dump() << '\n';
    if (!out) throw std::runtime_error("write failed for cache file '" + file_->string() + "'");
  }
  entries_.emplace(key, std::move(e));
}

std::size_t ResponseCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace uoce::llm
