#pragma once

#include <string_view>
#include <vector>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"

namespace uoce {

/// Structural checks on one tuple.
///  - error: a required slot is absent
///  - error: polarity or intensity outside its enumeration
///  - warning: a present span slot does not occur in @p source_text
///    (both sides normalized before the substring test)
std::vector<Diagnostic> validate_tuple(const OpinionTuple& tuple, std::string_view source_text);

}  // namespace uoce
