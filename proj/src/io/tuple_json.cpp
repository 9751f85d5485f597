#include "uoce/io/tuple_json.hpp"

namespace uoce::io {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json tuple_to_json(const OpinionTuple& t) {
  ordered_json obj = ordered_json::object();
  for (Slot s : kAllSlots) {
    const auto& v = t.get(s);
    obj[std::string(slot_key(s))] = v ? *v : std::string(kAbsent);
  }
  return obj;
}

OpinionTuple tuple_from_json(const json& obj, bool require_all_keys, const std::string& path,
                             std::vector<Diagnostic>& diags) {
  OpinionTuple t;
  if (!obj.is_object()) {
    diags.push_back({Severity::Error, "type", "opinion must be a JSON object", path});
    return t;
  }
  for (Slot s : kAllSlots) {
    const std::string key(slot_key(s));
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (require_all_keys)
        diags.push_back({Severity::Error, "missing-key", "missing slot key '" + key + "'", path});
      continue;
    }
    if (it->is_null()) continue;
    if (!it->is_string()) {
      diags.push_back({Severity::Error, "type", "slot value must be a string", path + "." + key});
      continue;
    }
    t.set(s, it->get<std::string>());
  }
  for (const auto& [key, value] : obj.items()) {
    if (!slot_from_key(key))
      diags.push_back({Severity::Warning, "unknown-key", "unknown key '" + key + "' ignored", path});
  }
  return t;
}

std::string render_tuples_json(std::span<const OpinionTuple> tuples) {
  if (tuples.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    std::string line;
    const ordered_json obj = tuple_to_json(tuples[i]);
    for (const auto& [key, value] : obj.items()) {
      line += line.empty() ? "{" : ", ";
      line += json(key).dump() + ": " + value.dump();
    }
    out += "  " + line + "}" + (i + 1 < tuples.size() ? ",\n" : "\n");
  }
  return out + "]";
}

ordered_json diagnostic_to_json(const Diagnostic& d) {
  return ordered_json{{"severity", std::string(to_string(d.severity))},
                      {"code", d.code},
                      {"message", d.message},
                      {"location", d.location}};
}

Diagnostic diagnostic_from_json(const json& obj) {
  Diagnostic d;
  const std::string sev = obj.at("severity").get<std::string>();
  if (sev == "error") d.severity = Severity::Error;
  else if (sev == "warning") d.severity = Severity::Warning;
  else throw json::other_error::create(501, "unknown severity '" + sev + "'", &obj);
  d.code = obj.at("code").get<std::string>();
  d.message = obj.value("message", "");
  d.location = obj.value("location", "");
  return d;
}

}  // namespace uoce::io
