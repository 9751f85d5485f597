#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uoce::onto {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

std::string rdf(std::string_view local);
std::string rdfs(std::string_view local);
std::string owl(std::string_view local);
std::string xsd(std::string_view local);
}  // namespace vocab

/// RDF term. Literals always carry a datatype; language-tagged literals use
/// rdf:langString.
struct Term {
  enum class Kind { Iri, Blank, Literal };

  Kind kind = Kind::Iri;
  std::string value;
  std::string datatype;
  std::string lang;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical);  // xsd:string
  static Term typed(std::string lexical, std::string datatype);
  static Term lang_literal(std::string lexical, std::string lang);

  bool is_iri() const { return kind == Kind::Iri; }
  bool is_blank() const { return kind == Kind::Blank; }
  bool is_literal() const { return kind == Kind::Literal; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// N-Triples style rendering, used in diagnostics and test output.
std::string to_string(const Term& t);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of triples plus a prefix table. Triples are unique and iterate in a
/// stable order (subject, predicate, object).
class Graph {
 public:
  /// Throws GraphError when the subject is a literal or the predicate is not
  /// an IRI. Returns false when the triple was already present.
  bool add(Term subject, Term predicate, Term object);
  bool add(const Triple& t) { return add(t.subject, t.predicate, t.object); }
  void merge(const Graph& other);

  void bind_prefix(std::string prefix, std::string iri);
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Term& s, const Term& p, const Term& o) const;

  std::vector<Term> objects(const Term& subject, const Term& predicate) const;
  std::vector<Term> subjects(const Term& predicate, const Term& object) const;
  /// Distinct subjects in stable order.
  std::vector<Term> all_subjects() const;
  bool has_type(const Term& subject, std::string_view class_iri) const;

  /// Same triple set; prefix tables are not compared.
  bool same_triples(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  std::map<std::string, std::string> prefixes_;
};

/// Syntax error raised by the parsers; what() includes line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string format, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace uoce::onto
