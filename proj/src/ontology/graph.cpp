#include "uoce/ontology/graph.hpp"

namespace uoce::onto {

namespace vocab {
std::string rdf(std::string_view local) { return std::string(kRdf) + std::string(local); }
std::string rdfs(std::string_view local) { return std::string(kRdfs) + std::string(local); }
std::string owl(std::string_view local) { return std::string(kOwl) + std::string(local); }
std::string xsd(std::string_view local) { return std::string(kXsd) + std::string(local); }
}  // namespace vocab

Term Term::iri(std::string value) { return Term{Kind::Iri, std::move(value), {}, {}}; }
Term Term::blank(std::string label) { return Term{Kind::Blank, std::move(label), {}, {}}; }
Term Term::literal(std::string lexical) {
  return Term{Kind::Literal, std::move(lexical), vocab::xsd("string"), {}};
}
Term Term::typed(std::string lexical, std::string datatype) {
  return Term{Kind::Literal, std::move(lexical), std::move(datatype), {}};
}
Term Term::lang_literal(std::string lexical, std::string lang) {
  for (char& c : lang) c = static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  return Term{Kind::Literal, std::move(lexical), vocab::rdf("langString"), std::move(lang)};
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Iri: return "<" + t.value + ">";
    case Term::Kind::Blank: return "_:" + t.value;
    case Term::Kind::Literal: {
      std::string out = "\"" + t.value + "\"";
      if (!t.lang.empty()) return out + "@" + t.lang;
      return out + "^^<" + t.datatype + ">";
    }
  }
  return {};
}

bool Graph::add(Term subject, Term predicate, Term object) {
  if (subject.is_literal()) throw GraphError("literal in subject position: " + to_string(subject));
  if (!predicate.is_iri()) throw GraphError("predicate must be an IRI: " + to_string(predicate));
  return triples_.insert(Triple{std::move(subject), std::move(predicate), std::move(object)}).second;
}

void Graph::merge(const Graph& other) {
  for (const Triple& t : other.triples_) triples_.insert(t);
  for (const auto& [p, iri] : other.prefixes_) prefixes_.emplace(p, iri);
}

void Graph::bind_prefix(std::string prefix, std::string iri) {
  prefixes_[std::move(prefix)] = std::move(iri);
}

bool Graph::contains(const Term& s, const Term& p, const Term& o) const {
  return triples_.contains(Triple{s, p, o});
}

std::vector<Term> Graph::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  auto it = triples_.lower_bound(Triple{subject, predicate, Term{Term::Kind::Iri, "", "", ""}});
  for (; it != triples_.end() && it->subject == subject && it->predicate == predicate; ++it)
    out.push_back(it->object);
  return out;
}

std::vector<Term> Graph::subjects(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const Triple& t : triples_) {
    if (t.predicate == predicate && t.object == object) out.push_back(t.subject);
  }
  return out;
}

std::vector<Term> Graph::all_subjects() const {
  std::vector<Term> out;
  for (const Triple& t : triples_) {
    if (out.empty() || out.back() != t.subject) out.push_back(t.subject);
  }
  return out;
}

bool Graph::has_type(const Term& subject, std::string_view class_iri) const {
  return contains(subject, Term::iri(vocab::rdf("type")), Term::iri(std::string(class_iri)));
}

ParseError::ParseError(std::string format, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(format + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

}  // namespace uoce::onto
