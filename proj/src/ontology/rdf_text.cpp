#include "rdf_text.hpp"

#include <cstdio>

namespace uoce::onto::detail {

std::vector<SubjectBlock> group_by_subject(const Graph& g) {
  const std::string rdf_type = vocab::rdf("type");
  std::vector<SubjectBlock> out;
  for (const Triple& t : g.triples()) {
    if (out.empty() || out.back().subject != t.subject) out.push_back({t.subject, {}, {}});
    SubjectBlock& b = out.back();
    if (t.predicate.value == rdf_type && !t.object.is_literal()) {
      b.types.push_back(t.object);
      continue;
    }
    if (b.properties.empty() || b.properties.back().first != t.predicate)
      b.properties.push_back({t.predicate, {}});
    b.properties.back().second.push_back(t.object);
  }
  return out;
}

namespace {

bool local_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-';
}

bool safe_local(std::string_view s) {
  if (s.empty()) return false;
  if (s.front() == '-') return false;
  for (char c : s) {
    if (!local_char(c)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> compact_iri(const std::map<std::string, std::string>& prefixes,
                                       std::string_view iri) {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    const std::string& ns = entry.second;
    if (ns.empty() || iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    if (!safe_local(iri.substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

bool is_ncname(std::string_view s) {
  if (s.empty()) return false;
  const char c0 = s.front();
  if (!((c0 >= 'A' && c0 <= 'Z') || (c0 >= 'a' && c0 <= 'z') || c0 == '_')) return false;
  for (char c : s) {
    if (!(local_char(c) || c == '.')) return false;
  }
  return true;
}

std::optional<std::pair<std::string, std::string>> split_ncname(std::string_view iri) {
  const auto cut = iri.find_last_of("#/");
  if (cut == std::string_view::npos) return std::nullopt;
  const std::string_view local = iri.substr(cut + 1);
  if (!is_ncname(local)) return std::nullopt;
  return std::pair{std::string(iri.substr(0, cut + 1)), std::string(local)};
}

std::string escape_xml(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\r': out += "&#13;"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[12];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool has_scheme(std::string_view iri) {
  const auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = iri[i];
    const bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    if (!(alpha || (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'))))
      return false;
  }
  return true;
}

std::string resolve_iri(std::string_view base, std::string_view ref) {
  if (base.empty() || has_scheme(ref)) return std::string(ref);
  if (ref.empty()) {
    return std::string(base.substr(0, base.find('#')));
  }
  if (ref.front() == '#') return std::string(base.substr(0, base.find('#'))) + std::string(ref);
  if (ref.size() > 1 && ref[0] == '/' && ref[1] == '/') {
    return std::string(base.substr(0, base.find(':') + 1)) + std::string(ref);
  }
  if (ref.front() == '/') {
    const auto scheme_end = base.find("://");
    if (scheme_end != std::string_view::npos) {
      const auto path_start = base.find('/', scheme_end + 3);
      return std::string(base.substr(0, path_start)) + std::string(ref);
    }
    return std::string(base.substr(0, base.find(':') + 1)) + std::string(ref);
  }
  std::string_view stem = base.substr(0, base.find_first_of("?#"));
  const auto slash = stem.rfind('/');
  return std::string(stem.substr(0, slash == std::string_view::npos ? 0 : slash + 1)) +
         std::string(ref);
}

}  // namespace uoce::onto::detail
