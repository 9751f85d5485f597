#include "uoce/io/predictions.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "uoce/io/tuple_json.hpp"

namespace uoce::io {

using nlohmann::json;
using nlohmann::ordered_json;

const PredictionRecord* PredictionsFile::find(std::string_view id) const {
  for (const PredictionRecord& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::map<std::string, std::vector<OpinionTuple>> PredictionsFile::corpus() const {
  std::map<std::string, std::vector<OpinionTuple>> out;
  for (const PredictionRecord& r : records) out[r.id] = r.tuples;
  return out;
}

std::size_t PredictionsFile::diagnostic_count(Severity s) const {
  std::size_t n = 0;
  for (const PredictionRecord& r : records) n += count_severity(r.diagnostics, s);
  return n;
}

PredictionsFile parse_predictions(std::string_view text) {
  PredictionsFile out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(where + ": not valid JSON: " + e.what());
    }
    try {
      if (!rec.is_object()) throw InputError(where + ": record must be a JSON object");
      const auto version = rec.find("format_version");
      if (version == rec.end() || !version->is_string() || version->get<std::string>() != kFormatVersion)
        throw InputError(where + ": format_version must be \"1\"");
      PredictionRecord r;
      r.id = rec.at("id").get<std::string>();
      if (!seen.insert(r.id).second) throw InputError(where + ": duplicate id '" + r.id + "'");
      const json& tuples = rec.at("tuples");
      if (!tuples.is_array()) throw InputError(where + ": tuples must be an array");
      std::vector<Diagnostic> problems;
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        r.tuples.push_back(tuple_from_json(tuples[k], false,
                                           "id '" + r.id + "'.tuples[" + std::to_string(k) + "]",
                                           problems));
      }
      if (has_errors(problems)) {
        for (const Diagnostic& d : problems) {
          if (d.severity == Severity::Error)
            throw InputError(where + ": " + format_diagnostic(d), problems);
        }
      }
      if (const auto raw = rec.find("raw"); raw != rec.end() && !raw->is_null())
        r.raw = raw->get<std::string>();
      if (const auto diags = rec.find("diagnostics"); diags != rec.end()) {
        for (const json& d : *diags) r.diagnostics.push_back(diagnostic_from_json(d));
      }
      out.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  return out;
}

PredictionsFile load_predictions_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_predictions(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what(), e.diagnostics());
  }
}

std::string render_predictions(const PredictionsFile& p) {
  std::string out;
  for (const PredictionRecord& r : p.records) {
    ordered_json rec;
    rec["format_version"] = std::string(kFormatVersion);
    rec["id"] = r.id;
    ordered_json tuples = ordered_json::array();
    for (const OpinionTuple& t : r.tuples) tuples.push_back(tuple_to_json(t));
    rec["tuples"] = std::move(tuples);
    if (r.raw) rec["raw"] = *r.raw;
    ordered_json diags = ordered_json::array();
    for (const Diagnostic& d : r.diagnostics) diags.push_back(diagnostic_to_json(d));
    rec["diagnostics"] = std::move(diags);
    out += rec.dump() + "\n";
  }
  return out;
}

void save_predictions_file(const PredictionsFile& p, const std::filesystem::path& path) {
  write_text_file(path, render_predictions(p));
}

std::vector<Diagnostic> check_against_dataset(const PredictionsFile& p, const DatasetFile& ds) {
  std::vector<Diagnostic> out;
  std::set<std::string> dataset_ids;
  for (const SentenceRecord& r : ds.records) dataset_ids.insert(r.id);
  std::set<std::string> predicted;
  for (const PredictionRecord& r : p.records) {
    predicted.insert(r.id);
    if (!dataset_ids.contains(r.id)) {
      out.push_back({Severity::Error, "unknown-id",
                     "prediction for id '" + r.id + "' which the dataset does not contain", r.id});
    }
  }
  for (const std::string& id : dataset_ids) {
    if (!predicted.contains(id))
      out.push_back({Severity::Warning, "missing-id", "no prediction record for id '" + id + "'", id});
  }
  return out;
}

}  // namespace uoce::io
