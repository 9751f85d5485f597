#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uoce {

enum class Severity { Warning, Error };

std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;      // short machine-readable tag, e.g. "required-slot"
  std::string message;
  std::string location;  // path or IRI the diagnostic refers to; may be empty

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::size_t count_severity(std::span<const Diagnostic> diags, Severity s) {
  return static_cast<std::size_t>(std::count_if(
      diags.begin(), diags.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

inline bool has_errors(std::span<const Diagnostic> diags) {
  return count_severity(diags, Severity::Error) > 0;
}

/// "error [code] location: message"
std::string format_diagnostic(const Diagnostic& d);

}  // namespace uoce
