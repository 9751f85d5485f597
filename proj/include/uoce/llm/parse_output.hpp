#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"

namespace uoce::llm {

struct ParsedOutput {
  std::vector<OpinionTuple> tuples;
  std::vector<Diagnostic> diagnostics;
};

struct ParseOptions {
  /// Drop every tuple that raised any diagnostic, warnings included.
  bool strict = false;
  /// When set, span slots not found in this text are warned about.
  std::optional<std::string_view> source_text;
};

/// Finds the outermost JSON array in @p raw (prose and code fences around
/// it are ignored) and reads one tuple per object.
///  - unknown keys: warning
///  - missing required slot or bad polarity/intensity: error, tuple dropped
///  - no parseable array: empty result with a single error
ParsedOutput parse_model_output(std::string_view raw, const ParseOptions& options = {});

}  // namespace uoce::llm
