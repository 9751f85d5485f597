#include <cctype>
#include <cstdint>
#include <cstdio>

#include "rdf_text.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::onto {

namespace {

std::string ttl_iri(const Graph& g, std::string_view iri) {
  if (auto c = detail::compact_iri(g.prefixes(), iri)) return *c;
  std::string out = "<";
  for (char c : iri) {
    if (std::string_view("<>\"{}|^`\\").find(c) != std::string_view::npos ||
        static_cast<unsigned char>(c) <= 0x20) {
      char buf[12];
      std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned char>(c));
      out += buf;
    } else {
      out += c;
    }
  }
  return out + ">";
}

std::string ttl_term(const Graph& g, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Iri: return ttl_iri(g, t.value);
    case Term::Kind::Blank: return "_:" + t.value;
    case Term::Kind::Literal: {
      std::string out = "\"" + detail::escape_quoted(t.value) + "\"";
      if (!t.lang.empty()) return out + "@" + t.lang;
      if (t.datatype == vocab::xsd("string")) return out;
      return out + "^^" + ttl_iri(g, t.datatype);
    }
  }
  return {};
}

}  // namespace

std::string write_turtle(const Graph& g) {
  std::string out;
  for (const auto& [prefix, ns] : g.prefixes()) out += "@prefix " + prefix + ": <" + ns + "> .\n";
  for (const detail::SubjectBlock& b : detail::group_by_subject(g)) {
    out += "\n" + ttl_term(g, b.subject);
    bool first = true;
    auto open_predicate = [&](const std::string& p) {
      out += first ? " " : " ;\n    ";
      out += p + " ";
      first = false;
    };
    if (!b.types.empty()) {
      open_predicate("a");
      for (std::size_t i = 0; i < b.types.size(); ++i) {
        if (i) out += ", ";
        out += ttl_term(g, b.types[i]);
      }
    }
    for (const auto& [pred, objects] : b.properties) {
      open_predicate(ttl_iri(g, pred.value));
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (i) out += ", ";
        out += ttl_term(g, objects[i]);
      }
    }
    out += " .\n";
  }
  return out;
}

namespace {

class TurtleReader {
 public:
  explicit TurtleReader(std::string_view text) : text_(text) {}

  Graph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Graph graph_;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
  std::size_t blank_counter_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    const auto [line, col] = detail::line_col(text_, at);
    throw ParseError("ttl", line, col, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool match_keyword(std::string_view kw, bool case_insensitive) {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    const char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':')
      return false;
    pos_ += kw.size();
    return true;
  }

  void statement() {
    if (peek() == '@') {
      const std::size_t start = pos_;
      ++pos_;
      if (match_keyword("prefix", false)) {
        prefix_decl();
        expect('.');
      } else if (match_keyword("base", false)) {
        base_decl();
        expect('.');
      } else {
        fail("unknown directive", start);
      }
      return;
    }
    if (match_keyword("PREFIX", true)) {
      prefix_decl();
      return;
    }
    if (match_keyword("BASE", true)) {
      base_decl();
      return;
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && peek() != ':') {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
            static_cast<unsigned char>(c) >= 0x80))
        fail("invalid prefix name");
      ++pos_;
    }
    if (at_end()) fail("expected ':' in prefix declaration", start);
    const std::string name(text_.substr(start, pos_ - start));
    ++pos_;
    skip_ws();
    const std::string ns = iri_ref();
    prefixes_[name] = ns;
    graph_.bind_prefix(name, ns);
  }

  void base_decl() {
    skip_ws();
    base_ = iri_ref();
  }

  void triples() {
    skip_ws();
    Term subject;
    if (peek() == '[') {
      subject = blank_property_list();
      skip_ws();
      if (peek() == '.') return;
    } else {
      subject = subject_term();
    }
    predicate_object_list(subject);
  }

  Term subject_term() {
    skip_ws();
    const char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') fail("literal in subject position");
    return Term::iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term predicate;
      if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':') {
        ++pos_;
        predicate = Term::iri(vocab::rdf("type"));
      } else if (peek() == '<') {
        predicate = Term::iri(iri_ref());
      } else {
        predicate = Term::iri(prefixed_name());
      }
      for (;;) {
        graph_.add(subject, predicate, object_term());
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || peek() == ']' || at_end()) return;
    }
  }

  Term blank_property_list() {
    expect('[');
    Term node = Term::blank("genid" + std::to_string(blank_counter_++));
    skip_ws();
    if (peek() != ']') predicate_object_list(node);
    expect(']');
    return node;
  }

  Term object_term() {
    skip_ws();
    const char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return literal();
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c)))
      return number();
    if (match_keyword("true", false)) return Term::typed("true", vocab::xsd("boolean"));
    if (match_keyword("false", false)) return Term::typed("false", vocab::xsd("boolean"));
    return Term::iri(prefixed_name());
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  Term blank_label() {
    pos_ += 2;
    const std::size_t start = pos_;
    while (!at_end() && (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))))
      ++pos_;
    if (pos_ == start) fail("empty blank node label");
    return Term::blank(std::string(text_.substr(start, pos_ - start)));
  }

  std::string prefixed_name() {
    const std::size_t start = pos_;
    while (!at_end() && peek() != ':' && (is_name_char(peek()) || peek() == '.')) ++pos_;
    if (peek() != ':') fail("expected IRI, prefixed name or literal", start);
    const std::string prefix(text_.substr(start, pos_ - start));
    ++pos_;
    std::string local;
    while (!at_end()) {
      const char c = peek();
      if (is_name_char(c) || c == ':') {
        local += c;
        ++pos_;
      } else if (c == '.' && (is_name_char(peek(1)) || peek(1) == ':')) {
        local += c;
        ++pos_;
      } else if (c == '\\' && pos_ + 1 < text_.size()) {
        local += text_[pos_ + 1];
        pos_ += 2;
      } else if (c == '%' && pos_ + 2 < text_.size()) {
        local += text_.substr(pos_, 3);
        pos_ += 3;
      } else {
        break;
      }
    }
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'", start);
    return it->second + local;
  }

  char32_t hex_escape(std::size_t digits) {
    if (text_.size() - pos_ < digits) fail("truncated unicode escape");
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = text_[pos_ + i];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<char32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<char32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<char32_t>(c - 'A' + 10);
      else fail("invalid hex digit in escape", pos_ + i);
    }
    pos_ += digits;
    return cp;
  }

  std::string iri_ref() {
    const std::size_t start = pos_;
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated IRI", start);
      const char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\n' || c == ' ' || c == '<' || c == '"') fail("unterminated IRI", start);
      if (c == '\\') {
        ++pos_;
        const char e = peek();
        ++pos_;
        if (e == 'u') detail::append_utf8(out, hex_escape(4));
        else if (e == 'U') detail::append_utf8(out, hex_escape(8));
        else fail("invalid escape in IRI", pos_ - 2);
        continue;
      }
      out += c;
      ++pos_;
    }
    return detail::resolve_iri(base_, out);
  }

  Term literal() {
    const std::size_t start = pos_;
    const char q = peek();
    const bool long_form = peek(1) == q && peek(2) == q;
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated string literal", start);
      const char c = peek();
      if (long_form) {
        if (c == q && peek(1) == q && peek(2) == q) {
          pos_ += 3;
          break;
        }
      } else {
        if (c == q) {
          ++pos_;
          break;
        }
        if (c == '\n' || c == '\r') fail("unterminated string literal", start);
      }
      if (c == '\\') {
        ++pos_;
        const char e = peek();
        ++pos_;
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': detail::append_utf8(value, hex_escape(4)); break;
          case 'U': detail::append_utf8(value, hex_escape(8)); break;
          default: fail("invalid string escape", pos_ - 2);
        }
        continue;
      }
      value += c;
      ++pos_;
    }
    if (peek() == '@') {
      ++pos_;
      const std::size_t ls = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
        ++pos_;
      if (pos_ == ls) fail("empty language tag");
      return Term::lang_literal(std::move(value), std::string(text_.substr(ls, pos_ - ls)));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      const std::string dt = peek() == '<' ? iri_ref() : prefixed_name();
      return Term::typed(std::move(value), dt);
    }
    return Term::literal(std::move(value));
  }

  Term number() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    bool dot = false, exp = false, digits = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
        ++pos_;
      } else if (c == '.' && !dot && !exp && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        ++pos_;
      } else if ((c == 'e' || c == 'E') && digits && !exp) {
        exp = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      } else {
        break;
      }
    }
    if (!digits) fail("malformed number", start);
    const std::string lexical(text_.substr(start, pos_ - start));
    if (exp) return Term::typed(lexical, vocab::xsd("double"));
    if (dot) return Term::typed(lexical, vocab::xsd("decimal"));
    return Term::typed(lexical, vocab::xsd("integer"));
  }
};

}  // namespace

Graph read_turtle(std::string_view text) {
  try {
    return TurtleReader(text).run();
  } catch (const GraphError& e) {
    throw ParseError("ttl", 0, 0, e.what());
  }
}

}  // namespace uoce::onto
