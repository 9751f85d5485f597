#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"
#include "uoce/io/dataset.hpp"

namespace uoce::io {

struct PredictionRecord {
  std::string id;
  std::vector<OpinionTuple> tuples;  // empty means "predicted nothing"
  std::optional<std::string> raw;    // model reply the tuples were parsed from
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

struct PredictionsFile {
  std::vector<PredictionRecord> records;

  friend bool operator==(const PredictionsFile&, const PredictionsFile&) = default;

  const PredictionRecord* find(std::string_view id) const;
  std::map<std::string, std::vector<OpinionTuple>> corpus() const;
  std::size_t diagnostic_count(Severity s) const;
};

/// JSON lines, one record per sentence:
///   {"format_version": "1", "id": ..., "tuples": [...], "raw": ...,
///    "diagnostics": [{"severity", "code", "message", "location"}]}
/// Tuple objects may omit slot keys (absent). Throws InputError on
/// malformed lines or duplicate ids.
PredictionsFile parse_predictions(std::string_view text);
PredictionsFile load_predictions_file(const std::filesystem::path& path);

std::string render_predictions(const PredictionsFile& p);
void save_predictions_file(const PredictionsFile& p, const std::filesystem::path& path);

/// Errors for prediction ids the dataset does not contain, warnings for
/// dataset ids without a prediction record.
std::vector<Diagnostic> check_against_dataset(const PredictionsFile& p, const DatasetFile& ds);

}  // namespace uoce::io
