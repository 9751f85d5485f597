#include "uoce/io/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uoce/core/validate.hpp"
#include "uoce/io/tuple_json.hpp"

namespace uoce::io {

using nlohmann::json;
using nlohmann::ordered_json;

const SentenceRecord* DatasetFile::find(std::string_view id) const {
  for (const SentenceRecord& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::map<std::string, std::vector<OpinionTuple>> DatasetFile::corpus() const {
  std::map<std::string, std::vector<OpinionTuple>> out;
  for (const SentenceRecord& r : records) out[r.id] = r.opinions;
  return out;
}

namespace {

std::string record_path(std::size_t i, const std::string& id) {
  std::string p = "records[" + std::to_string(i) + "]";
  if (!id.empty()) p += " (id '" + id + "')";
  return p;
}

const json* require(const json& obj, const char* key, json::value_t type, const std::string& path,
                    std::vector<Diagnostic>& errors) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    errors.push_back({Severity::Error, "missing-key", std::string("missing key '") + key + "'", path});
    return nullptr;
  }
  if (it->type() != type) {
    errors.push_back({Severity::Error, "type", std::string("key '") + key + "' has the wrong type",
                      path + "." + key});
    return nullptr;
  }
  return &*it;
}

}  // namespace

DatasetFile parse_dataset(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("dataset is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("dataset must be a JSON object");

  std::vector<Diagnostic> errors;
  DatasetFile ds;
  const json* version = require(doc, "format_version", json::value_t::string, "$", errors);
  if (version && version->get<std::string>() != kFormatVersion) {
    errors.push_back({Severity::Error, "format-version",
                      "unsupported format_version '" + version->get<std::string>() + "'",
                      "$.format_version"});
  }
  for (auto [key, field] : {std::pair{"name", &ds.name}, std::pair{"version", &ds.version},
                            std::pair{"license", &ds.license}}) {
    const auto it = doc.find(key);
    if (it == doc.end()) continue;
    if (!it->is_string()) {
      errors.push_back({Severity::Error, "type", std::string(key) + " must be a string",
                        std::string("$.") + key});
    } else {
      *field = it->get<std::string>();
    }
  }
  const json* records = require(doc, "records", json::value_t::array, "$", errors);

  std::set<std::string> seen;
  if (records) {
    for (std::size_t i = 0; i < records->size(); ++i) {
      const json& r = (*records)[i];
      if (!r.is_object()) {
        errors.push_back({Severity::Error, "type", "record must be an object", record_path(i, "")});
        continue;
      }
      SentenceRecord rec;
      const json* id = require(r, "id", json::value_t::string, record_path(i, ""), errors);
      if (id) rec.id = id->get<std::string>();
      const std::string path = record_path(i, rec.id);
      if (id && rec.id.empty())
        errors.push_back({Severity::Error, "empty-id", "record id is empty", path});
      if (id && !seen.insert(rec.id).second)
        errors.push_back({Severity::Error, "duplicate-id", "duplicate record id '" + rec.id + "'", path});

      if (const json* domain = require(r, "domain", json::value_t::string, path, errors)) {
        if (auto d = parse_domain(domain->get<std::string>())) {
          rec.domain = *d;
        } else {
          errors.push_back({Severity::Error, "domain",
                            "unknown domain '" + domain->get<std::string>() + "'", path + ".domain"});
        }
      }
      if (const json* t = require(r, "text", json::value_t::string, path, errors))
        rec.text = t->get<std::string>();
      const json* ops = require(r, "opinions", json::value_t::array, path, errors);
      if (ops) {
        for (std::size_t k = 0; k < ops->size(); ++k) {
          const std::string op_path = path + ".opinions[" + std::to_string(k) + "]";
          std::vector<Diagnostic> diags;
          OpinionTuple tuple = tuple_from_json((*ops)[k], true, op_path, diags);
          if (!has_errors(diags)) {
            for (Diagnostic d : validate_tuple(tuple, rec.text)) {
              d.location = op_path + (d.location.empty() ? "" : "." + d.location);
              diags.push_back(std::move(d));
            }
          }
          for (Diagnostic& d : diags) {
            if (d.severity == Severity::Error) errors.push_back(std::move(d));
            else ds.warnings.push_back(std::move(d));
          }
          rec.opinions.push_back(std::move(tuple));
        }
      }
      ds.records.push_back(std::move(rec));
    }
  }
  if (!errors.empty()) {
    std::string what = "invalid dataset: " + format_diagnostic(errors.front());
    if (errors.size() > 1) what += " (and " + std::to_string(errors.size() - 1) + " more)";
    throw InputError(what, std::move(errors));
  }
  return ds;
}

DatasetFile load_dataset(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset(ss.str());
}

DatasetFile load_dataset_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_dataset(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.diagnostics());
  }
}

std::string render_dataset(const DatasetFile& ds) {
  ordered_json doc;
  doc["format_version"] = std::string(kFormatVersion);
  doc["name"] = ds.name;
  doc["version"] = ds.version;
  doc["license"] = ds.license;
  ordered_json records = ordered_json::array();
  for (const SentenceRecord& r : ds.records) {
    ordered_json ops = ordered_json::array();
    for (const OpinionTuple& t : r.opinions) ops.push_back(tuple_to_json(t));
    records.push_back(ordered_json{{"id", r.id},
                                   {"domain", std::string(to_string(r.domain))},
                                   {"text", r.text},
                                   {"opinions", std::move(ops)}});
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

void save_dataset_file(const DatasetFile& ds, const std::filesystem::path& path) {
  write_text_file(path, render_dataset(ds));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace uoce::io
