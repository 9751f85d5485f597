#include "uoce/core/validate.hpp"

#include <string>

#include "uoce/core/normalize.hpp"

namespace uoce {

std::vector<Diagnostic> validate_tuple(const OpinionTuple& tuple, std::string_view source_text) {
  std::vector<Diagnostic> out;

  for (Slot s : kAllSlots) {
    if (is_required(s) && !tuple.has(s)) {
      out.push_back({Severity::Error, "required-slot",
                     "required slot '" + std::string(slot_name(s)) + "' is absent",
                     std::string(slot_key(s))});
    }
  }

  if (const auto& sp = tuple.get(Slot::SentimentPolarity); sp && !parse_polarity(*sp)) {
    out.push_back({Severity::Error, "enumeration",
                   "sentiment polarity '" + *sp + "' is not one of positive, negative, neutral",
                   "sp"});
  }
  if (const auto& si = tuple.get(Slot::SentimentIntensity); si && !parse_intensity(*si)) {
    out.push_back({Severity::Error, "enumeration",
                   "sentiment intensity '" + *si + "' is not one of weak, average, strong",
                   "si"});
  }

  const std::string haystack = normalize_value(source_text).value_or("");
  for (Slot s : kAllSlots) {
    const auto& v = tuple.get(s);
    if (!is_span(s) || !v) continue;
    if (haystack.find(*v) == std::string::npos) {
      out.push_back({Severity::Warning, "span-not-found",
                     std::string(slot_name(s)) + " '" + *v + "' does not occur in the text",
                     std::string(slot_key(s))});
    }
  }
  return out;
}

}  // namespace uoce
