#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace uoce {

/// Canonical comparison form of a slot value: NFC, case-folded, trimmed,
/// internal whitespace collapsed to single spaces. The null spellings
/// "n/a", "na", "none" and the empty string map to std::nullopt.
std::optional<std::string> normalize_value(std::string_view raw);

/// True for absolute IRIs with an authority ("scheme://...") or a urn:
/// value. Whitespace anywhere disqualifies the value.
bool looks_like_iri(std::string_view value);

}  // namespace uoce
