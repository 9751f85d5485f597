#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/opinion.hpp"

namespace uoce::io {

/// Written for absent slots.
inline constexpr std::string_view kAbsent = "N/A";

/// Object with the ten slot keys in canonical order; absent slots as "N/A".
nlohmann::ordered_json tuple_to_json(const OpinionTuple& t);

/// Reads slot keys from @p obj. With @p require_all_keys every slot key must
/// be present (null spellings mark absence); otherwise a missing key means
/// absent. Non-string values and unknown keys are reported in @p diags under
/// @p path. Returns the tuple even when diagnostics were raised.
OpinionTuple tuple_from_json(const nlohmann::json& obj, bool require_all_keys,
                             const std::string& path, std::vector<Diagnostic>& diags);

/// JSON array with one tuple object per line:
///   [
///     {"at": "...", "ac": "...", ...}
///   ]
/// An empty list renders as "[]".
std::string render_tuples_json(std::span<const OpinionTuple> tuples);

nlohmann::ordered_json diagnostic_to_json(const Diagnostic& d);
Diagnostic diagnostic_from_json(const nlohmann::json& obj);

}  // namespace uoce::io
