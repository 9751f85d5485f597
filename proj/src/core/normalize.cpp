#include "uoce/core/normalize.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace uoce {

namespace {

const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
    return n;
  }();
  return *instance;
}

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

std::optional<std::string> normalize_value(std::string_view raw) {
  icu::UnicodeString text =
      icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));

  // Fold then compose, twice: folding can leave decomposed sequences whose
  // composition folds again, and the second round reaches the fixed point.
  UErrorCode status = U_ZERO_ERROR;
  for (int round = 0; round < 2; ++round) {
    text.foldCase(U_FOLD_CASE_DEFAULT);
    text = nfc().normalize(text, status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  }

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < text.length();) {
    const UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) {
      collapsed.append(static_cast<UChar>(u' '));
      pending_space = false;
    }
    collapsed.append(c);
  }

  std::string out;
  collapsed.toUTF8String(out);
  if (out.empty() || out == "n/a" || out == "na" || out == "none") return std::nullopt;
  return out;
}

bool looks_like_iri(std::string_view value) {
  const auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!ascii_alpha(value[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    const char c = value[i];
    if (!(ascii_alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'))
      return false;
  }
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '>' || c == '"')
      return false;
  }
  const std::string_view rest = value.substr(colon + 1);
  std::string scheme(value.substr(0, colon));
  for (char& c : scheme) c = static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  if (scheme == "urn") return rest.size() > 0;
  return rest.size() > 2 && rest.substr(0, 2) == "//";
}

}  // namespace uoce
