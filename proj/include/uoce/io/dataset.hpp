#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"

namespace uoce::io {

inline constexpr std::string_view kFormatVersion = "1";

/// Raised for unreadable or structurally invalid input files. Carries every
/// error found, each located by record id and JSON path.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::vector<Diagnostic> diagnostics = {})
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct DatasetFile {
  std::string name;
  std::string version;
  std::string license;
  std::vector<SentenceRecord> records;
  /// Non-fatal findings from loading (e.g. a span not found in the text).
  std::vector<Diagnostic> warnings;

  const SentenceRecord* find(std::string_view id) const;
  /// Gold tuples keyed by sentence id.
  std::map<std::string, std::vector<OpinionTuple>> corpus() const;
};

/// Document layout:
///   {"format_version": "1", "name": ..., "version": ..., "license": ...,
///    "records": [{"id", "domain", "text", "opinions": [{at, ac, ..., r}]}]}
/// Every opinion object carries all ten slot keys, "N/A" marking absence.
/// Throws InputError on malformed JSON, missing keys, unknown domains,
/// duplicate ids, or any gold tuple failing validate_tuple with an error.
DatasetFile parse_dataset(std::string_view text);
DatasetFile load_dataset(std::istream& in);
DatasetFile load_dataset_file(const std::filesystem::path& path);

std::string render_dataset(const DatasetFile& ds);
void save_dataset_file(const DatasetFile& ds, const std::filesystem::path& path);

/// Whole-file read; throws InputError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace uoce::io
