#include "uoce/llm/parse_output.hpp"

#include <nlohmann/json.hpp>

#include "uoce/core/validate.hpp"
#include "uoce/io/tuple_json.hpp"

namespace uoce::llm {

using nlohmann::json;

namespace {

/// End (exclusive) of the bracketed value opening at @p start, honouring
/// JSON strings; npos when unbalanced.
std::size_t balanced_end(std::string_view s, std::size_t start) {
  std::vector<char> stack;
  bool in_string = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    switch (c) {
      case '"': in_string = true; break;
      case '[': stack.push_back(']'); break;
      case '{': stack.push_back('}'); break;
      case ']':
      case '}':
        if (stack.empty() || stack.back() != c) return std::string_view::npos;
        stack.pop_back();
        if (stack.empty()) return i + 1;
        break;
      default: break;
    }
  }
  return std::string_view::npos;
}

std::optional<json> first_json(std::string_view raw, char open) {
  for (std::size_t pos = raw.find(open); pos != std::string_view::npos; pos = raw.find(open, pos + 1)) {
    const std::size_t end = balanced_end(raw, pos);
    if (end == std::string_view::npos) continue;
    try {
      return json::parse(raw.substr(pos, end - pos));
    } catch (const json::parse_error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

ParsedOutput parse_model_output(std::string_view raw, const ParseOptions& options) {
  ParsedOutput out;
  std::optional<json> doc = first_json(raw, '[');
  if (!doc) {
    if (auto obj = first_json(raw, '{')) {
      out.diagnostics.push_back({Severity::Warning, "not-an-array",
                                 "reply holds a single object instead of an array", "$"});
      doc = json::array({*obj});
    }
  }
  if (!doc) {
    out.diagnostics.push_back({Severity::Error, "unparseable",
                               "no JSON array of opinions found in the model reply", "$"});
    return out;
  }

  for (std::size_t k = 0; k < doc->size(); ++k) {
    const std::string path = "$[" + std::to_string(k) + "]";
    const json& item = (*doc)[k];
    std::vector<Diagnostic> diags;
    if (!item.is_object()) {
      out.diagnostics.push_back({Severity::Error, "type", "array element is not an object; dropped", path});
      continue;
    }
    OpinionTuple t = io::tuple_from_json(item, false, path, diags);
    if (!has_errors(diags)) {
      for (Diagnostic d : validate_tuple(t, options.source_text.value_or(""))) {
        if (d.code == "span-not-found" && !options.source_text) continue;
        d.location = path + "." + d.location;
        diags.push_back(std::move(d));
      }
    }
    const bool drop = has_errors(diags) || (options.strict && !diags.empty());
    if (drop) {
      const bool only_warnings = !has_errors(diags);
      diags.push_back({only_warnings ? Severity::Warning : Severity::Error, "dropped",
                       only_warnings ? "tuple dropped in strict mode" : "tuple dropped", path});
    }
    for (Diagnostic& d : diags) out.diagnostics.push_back(std::move(d));
    if (!drop) out.tuples.push_back(std::move(t));
  }
  return out;
}

}  // namespace uoce::llm
