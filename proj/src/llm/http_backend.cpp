#include "uoce/llm/http_backend.hpp"

#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace uoce::llm {

using nlohmann::json;

HttpBackend::HttpBackend(ModelConfig cfg) : cfg_(std::move(cfg)) {
  const std::string& url = cfg_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint is not a URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    throw ConfigError("endpoint scheme must be http or https: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  base_path_ = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
}

std::string HttpBackend::complete(const ChatRequest& request) {
  ++requests_;
  httplib::Client client(scheme_host_port_);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(cfg_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  httplib::Headers headers;
  bool credential_sent = false;
  if (!cfg_.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg_.api_key_env.c_str()); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
      credential_sent = true;
    }
  }
  const json body{{"model", request.model},
                  {"messages", json::array({json{{"role", "user"}, {"content", request.prompt}}})},
                  {"temperature", request.temperature},
                  {"max_tokens", request.max_tokens}};
  const std::string path = base_path_ + "/chat/completions";
  const auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw BackendError("request to " + scheme_host_port_ + path + " failed: " +
                           httplib::to_string(res.error()),
                       true);
  }
  const int status = res->status;
  if (status == 401 || status == 403) {
    std::string what = "authentication failed (HTTP " + std::to_string(status) + ")";
    if (cfg_.api_key_env.empty()) what += "; no credential variable is configured";
    else if (!credential_sent) what += "; environment variable " + cfg_.api_key_env + " is not set";
    else what += "; check the credential in environment variable " + cfg_.api_key_env;
    throw AuthError(what);
  }
  if (status == 408 || status == 429 || status >= 500)
    throw BackendError("server returned HTTP " + std::to_string(status), true);
  if (status < 200 || status >= 300)
    throw BackendError("server returned HTTP " + std::to_string(status) + ": " + res->body, false);

  try {
    const json reply = json::parse(res->body);
    const json& content = reply.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return "";
    return content.get<std::string>();
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed chat-completion response: ") + e.what(), false);
  }
}

}  // namespace uoce::llm
