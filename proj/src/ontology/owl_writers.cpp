#include <functional>

#include "owl_model.hpp"
#include "rdf_text.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::onto {

using detail::EntityInfo;
using detail::EntityKind;
using detail::OwlModel;

namespace {

constexpr EntityKind kFrameOrder[] = {EntityKind::AnnotationProperty, EntityKind::Datatype,
                                      EntityKind::ObjectProperty,     EntityKind::DataProperty,
                                      EntityKind::Class,              EntityKind::Individual};

std::string name_of(const OwlModel& m, const Term& t) {
  if (t.is_blank()) return "_:" + t.value;
  if (auto c = detail::compact_iri(m.prefixes, t.value)) return *c;
  return "<" + t.value + ">";
}

std::string literal_text(const OwlModel& m, const Term& t) {
  std::string out = "\"" + detail::escape_quoted(t.value) + "\"";
  if (!t.lang.empty()) return out + "@" + t.lang;
  if (t.datatype == vocab::xsd("string")) return out;
  return out + "^^" + name_of(m, Term::iri(t.datatype));
}

std::string value_text(const OwlModel& m, const Term& t) {
  return t.is_literal() ? literal_text(m, t) : name_of(m, t);
}

}  // namespace

// ---------------------------------------------------------------- Manchester

std::string write_manchester(const Graph& g) {
  const OwlModel m = detail::build_owl_model(g);
  std::string out;
  for (const auto& [p, ns] : m.prefixes) out += "Prefix: " + p + ": <" + ns + ">\n";
  out += "\nOntology:";
  if (!m.ontology.empty()) out += " <" + m.ontology + ">";
  out += "\n";

  auto section = [&](const std::string& keyword, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out += "    " + keyword + ":\n";
    for (std::size_t i = 0; i < items.size(); ++i)
      out += "        " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  };
  auto annotation_items = [&](const std::vector<std::pair<Term, Term>>& anns) {
    std::vector<std::string> items;
    for (const auto& [p, v] : anns) items.push_back(name_of(m, p) + " " + value_text(m, v));
    return items;
  };
  auto names = [&](const std::vector<Term>& ts) {
    std::vector<std::string> items;
    for (const Term& t : ts) items.push_back(name_of(m, t));
    return items;
  };

  section("Annotations", annotation_items(m.ontology_annotations));

  std::set<Term> annotated;
  for (EntityKind kind : kFrameOrder) {
    const char* keyword = "";
    switch (kind) {
      case EntityKind::AnnotationProperty: keyword = "AnnotationProperty"; break;
      case EntityKind::Datatype: keyword = "Datatype"; break;
      case EntityKind::ObjectProperty: keyword = "ObjectProperty"; break;
      case EntityKind::DataProperty: keyword = "DataProperty"; break;
      case EntityKind::Class: keyword = "Class"; break;
      case EntityKind::Individual: keyword = "Individual"; break;
    }
    for (const Term& e : m.of_kind(kind)) {
      out += "\n" + std::string(keyword) + ": " + name_of(m, e) + "\n";
      const EntityInfo* info = m.info(e);
      if (info == nullptr) continue;
      // Frame content belongs to the first frame an entity appears in.
      if (!annotated.insert(e).second) continue;
      section("Annotations", annotation_items(info->annotations));
      switch (kind) {
        case EntityKind::Class: section("SubClassOf", names(info->superclasses)); break;
        case EntityKind::ObjectProperty:
        case EntityKind::DataProperty:
        case EntityKind::AnnotationProperty:
          section("Domain", names(info->domains));
          section("Range", names(info->ranges));
          break;
        default: break;
      }
      section("Types", names(info->types));
      std::vector<std::string> facts;
      for (const auto& [p, o] : info->object_facts) facts.push_back(name_of(m, p) + " " + name_of(m, o));
      for (const auto& [p, o] : info->data_facts) facts.push_back(name_of(m, p) + " " + literal_text(m, o));
      section("Facts", facts);
    }
  }
  return out;
}

// ---------------------------------------------------------- OWL functional

std::string write_owl_functional(const Graph& g) {
  const OwlModel m = detail::build_owl_model(g);
  std::string out;
  for (const auto& [p, ns] : m.prefixes) out += "Prefix(" + p + ":=<" + ns + ">)\n";
  out += "\nOntology(";
  if (!m.ontology.empty()) out += "<" + m.ontology + ">";
  out += "\n";
  for (const auto& [p, v] : m.ontology_annotations)
    out += "Annotation(" + name_of(m, p) + " " + value_text(m, v) + ")\n";
  out += "\n";

  auto kind_word = [](EntityKind k) {
    switch (k) {
      case EntityKind::AnnotationProperty: return "AnnotationProperty";
      case EntityKind::Datatype: return "Datatype";
      case EntityKind::ObjectProperty: return "ObjectProperty";
      case EntityKind::DataProperty: return "DataProperty";
      case EntityKind::Class: return "Class";
      case EntityKind::Individual: return "NamedIndividual";
    }
    return "";
  };
  for (EntityKind kind : kFrameOrder) {
    for (const Term& e : m.of_kind(kind)) {
      if (e.is_blank()) continue;  // anonymous individuals are not declared
      out += std::string("Declaration(") + kind_word(kind) + "(" + name_of(m, e) + "))\n";
    }
  }

  std::vector<std::string> axioms;
  for (const auto& [e, info] : m.entities) {
    const std::string s = name_of(m, e);
    for (const auto& [p, v] : info.annotations)
      axioms.push_back("AnnotationAssertion(" + name_of(m, p) + " " + s + " " + value_text(m, v) + ")");
    for (const Term& c : info.superclasses) axioms.push_back("SubClassOf(" + s + " " + name_of(m, c) + ")");
    const char* prop = m.has_kind(e, EntityKind::ObjectProperty) ? "ObjectProperty"
                       : m.has_kind(e, EntityKind::DataProperty) ? "DataProperty"
                                                                  : "AnnotationProperty";
    for (const Term& d : info.domains)
      axioms.push_back(std::string(prop) + "Domain(" + s + " " + name_of(m, d) + ")");
    for (const Term& r : info.ranges)
      axioms.push_back(std::string(prop) + "Range(" + s + " " + name_of(m, r) + ")");
    for (const Term& t : info.types) axioms.push_back("ClassAssertion(" + name_of(m, t) + " " + s + ")");
    for (const auto& [p, o] : info.object_facts)
      axioms.push_back("ObjectPropertyAssertion(" + name_of(m, p) + " " + s + " " + name_of(m, o) + ")");
    for (const auto& [p, o] : info.data_facts)
      axioms.push_back("DataPropertyAssertion(" + name_of(m, p) + " " + s + " " + literal_text(m, o) + ")");
  }
  if (!axioms.empty()) out += "\n";
  for (const std::string& a : axioms) out += a + "\n";
  out += ")\n";
  return out;
}

// ------------------------------------------------------------------ OWL/XML

namespace {

class OwxWriter {
 public:
  explicit OwxWriter(const OwlModel& m) : m_(m) {}

  std::string iri_attr(const Term& t) const {
    if (auto c = detail::compact_iri(m_.prefixes, t.value))
      return "abbreviatedIRI=\"" + detail::escape_xml(*c, true) + "\"";
    return "IRI=\"" + detail::escape_xml(t.value, true) + "\"";
  }

  std::string entity(const char* element, const Term& t) const {
    return std::string("<") + element + " " + iri_attr(t) + "/>";
  }

  std::string individual(const Term& t) const {
    if (t.is_blank())
      return "<AnonymousIndividual nodeID=\"" + detail::escape_xml(t.value, true) + "\"/>";
    return entity("NamedIndividual", t);
  }

  std::string literal(const Term& t) const {
    std::string out = "<Literal";
    if (!t.lang.empty()) {
      out += " xml:lang=\"" + detail::escape_xml(t.lang, true) + "\"";
    } else if (t.datatype != vocab::xsd("string")) {
      out += " datatypeIRI=\"" + detail::escape_xml(t.datatype, true) + "\"";
    }
    return out + ">" + detail::escape_xml(t.value, false) + "</Literal>";
  }

  std::string annotation_value(const Term& t) const {
    if (t.is_literal()) return literal(t);
    if (t.is_blank())
      return "<AnonymousIndividual nodeID=\"" + detail::escape_xml(t.value, true) + "\"/>";
    if (auto c = detail::compact_iri(m_.prefixes, t.value))
      return "<AbbreviatedIRI>" + detail::escape_xml(*c, false) + "</AbbreviatedIRI>";
    return "<IRI>" + detail::escape_xml(t.value, false) + "</IRI>";
  }

  std::string annotation_subject(const Term& t) const { return annotation_value(t); }

  static std::string block(const std::string& tag, const std::vector<std::string>& children) {
    std::string out = "    <" + tag + ">\n";
    for (const std::string& c : children) out += "        " + c + "\n";
    return out + "    </" + tag + ">\n";
  }

 private:
  const OwlModel& m_;
};

}  // namespace

std::string write_owl_xml(const Graph& g) {
  const OwlModel m = detail::build_owl_model(g);
  const OwxWriter w(m);
  std::string out = "<?xml version=\"1.0\"?>\n<Ontology xmlns=\"http://www.w3.org/2002/07/owl#\"";
  if (!m.ontology.empty()) {
    out += "\n     xml:base=\"" + detail::escape_xml(m.ontology, true) + "\"";
  }
  out += "\n     xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"";
  out += "\n     xmlns:xml=\"http://www.w3.org/XML/1998/namespace\"";
  out += "\n     xmlns:xsd=\"http://www.w3.org/2001/XMLSchema#\"";
  out += "\n     xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"";
  if (!m.ontology.empty()) out += "\n     ontologyIRI=\"" + detail::escape_xml(m.ontology, true) + "\"";
  out += ">\n";
  for (const auto& [p, ns] : m.prefixes) {
    out += "    <Prefix name=\"" + detail::escape_xml(p, true) + "\" IRI=\"" +
           detail::escape_xml(ns, true) + "\"/>\n";
  }
  for (const auto& [p, v] : m.ontology_annotations)
    out += OwxWriter::block("Annotation", {w.entity("AnnotationProperty", p), w.annotation_value(v)});

  auto element_of = [](EntityKind k) {
    switch (k) {
      case EntityKind::AnnotationProperty: return "AnnotationProperty";
      case EntityKind::Datatype: return "Datatype";
      case EntityKind::ObjectProperty: return "ObjectProperty";
      case EntityKind::DataProperty: return "DataProperty";
      case EntityKind::Class: return "Class";
      case EntityKind::Individual: return "NamedIndividual";
    }
    return "";
  };
  for (EntityKind kind : kFrameOrder) {
    for (const Term& e : m.of_kind(kind)) {
      if (e.is_blank()) continue;
      out += OwxWriter::block("Declaration", {w.entity(element_of(kind), e)});
    }
  }

  for (const auto& [e, info] : m.entities) {
    for (const Term& c : info.superclasses)
      out += OwxWriter::block("SubClassOf", {w.entity("Class", e), w.entity("Class", c)});
    const bool object = m.has_kind(e, EntityKind::ObjectProperty);
    const bool data = !object && m.has_kind(e, EntityKind::DataProperty);
    const char* prop = object ? "ObjectProperty" : data ? "DataProperty" : "AnnotationProperty";
    for (const Term& d : info.domains) {
      if (object || data) {
        out += OwxWriter::block(std::string(prop) + "Domain", {w.entity(prop, e), w.entity("Class", d)});
      } else {
        out += OwxWriter::block("AnnotationPropertyDomain",
                                {w.entity(prop, e), w.annotation_value(d)});
      }
    }
    for (const Term& r : info.ranges) {
      if (object) {
        out += OwxWriter::block("ObjectPropertyRange", {w.entity(prop, e), w.entity("Class", r)});
      } else if (data) {
        out += OwxWriter::block("DataPropertyRange", {w.entity(prop, e), w.entity("Datatype", r)});
      } else {
        out += OwxWriter::block("AnnotationPropertyRange",
                                {w.entity(prop, e), w.annotation_value(r)});
      }
    }
    for (const Term& t : info.types)
      out += OwxWriter::block("ClassAssertion", {w.entity("Class", t), w.individual(e)});
    for (const auto& [p, o] : info.object_facts)
      out += OwxWriter::block("ObjectPropertyAssertion",
                              {w.entity("ObjectProperty", p), w.individual(e), w.individual(o)});
    for (const auto& [p, o] : info.data_facts)
      out += OwxWriter::block("DataPropertyAssertion",
                              {w.entity("DataProperty", p), w.individual(e), w.literal(o)});
    for (const auto& [p, v] : info.annotations)
      out += OwxWriter::block("AnnotationAssertion", {w.entity("AnnotationProperty", p),
                                                     w.annotation_subject(e), w.annotation_value(v)});
  }
  out += "</Ontology>\n";
  return out;
}

// ---------------------------------------------------------------------- OBO

namespace {

std::string obo_id(const OwlModel& m, const Term& t) {
  if (t.is_blank()) return "_:" + t.value;
  if (auto c = detail::compact_iri(m.prefixes, t.value)) return *c;
  return t.value;
}

std::string obo_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '{': out += "\\{"; break;
      case '!': out += "\\!"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string write_obo(const Graph& g) {
  const OwlModel m = detail::build_owl_model(g);
  const std::string label = vocab::rdfs("label");
  const std::string comment = vocab::rdfs("comment");

  std::string out = "format-version: 1.4\n";
  if (!m.ontology.empty()) {
    std::string name = m.ontology;
    const auto cut = name.find_last_of("/#:");
    if (cut != std::string::npos && cut + 1 < name.size()) name = name.substr(cut + 1);
    out += "ontology: " + name + "\n";
  }
  for (const auto& [p, ns] : m.prefixes) out += "idspace: " + p + " " + ns + "\n";
  out += "remark: literal-valued assertions other than names and definitions are not represented\n";

  auto header_lines = [&](const Term& e, const EntityInfo* info) {
    std::string s = "id: " + obo_id(m, e) + "\n";
    if (info == nullptr) return s;
    for (const auto& [p, v] : info->annotations) {
      if (p.value == label && v.is_literal()) s += "name: " + obo_escape(v.value) + "\n";
    }
    for (const auto& [p, v] : info->annotations) {
      if (p.value == comment && v.is_literal()) s += "def: \"" + obo_escape(v.value) + "\" []\n";
    }
    return s;
  };

  std::set<Term> written;
  for (const Term& c : m.of_kind(EntityKind::Class)) {
    const EntityInfo* info = m.info(c);
    out += "\n[Term]\n" + header_lines(c, info);
    written.insert(c);
    if (info == nullptr) continue;
    for (const Term& s : info->superclasses) out += "is_a: " + obo_id(m, s) + "\n";
  }
  std::set<Term> properties;
  for (EntityKind k : {EntityKind::ObjectProperty, EntityKind::DataProperty,
                       EntityKind::AnnotationProperty}) {
    for (const Term& p : m.of_kind(k)) properties.insert(p);
  }
  for (const Term& p : properties) {
    const EntityInfo* info = m.info(p);
    out += "\n[Typedef]\n" + header_lines(p, info);
    if (m.has_kind(p, EntityKind::AnnotationProperty) && !m.has_kind(p, EntityKind::ObjectProperty))
      out += "is_metadata_tag: true\n";
    if (info == nullptr) continue;
    for (const Term& d : info->domains) out += "domain: " + obo_id(m, d) + "\n";
    for (const Term& r : info->ranges) out += "range: " + obo_id(m, r) + "\n";
  }
  for (const Term& i : m.of_kind(EntityKind::Individual)) {
    if (properties.contains(i) || written.contains(i)) continue;
    const EntityInfo* info = m.info(i);
    out += "\n[Instance]\n" + header_lines(i, info);
    if (info == nullptr) continue;
    for (const Term& t : info->types) out += "instance_of: " + obo_id(m, t) + "\n";
    for (const auto& [p, o] : info->object_facts)
      out += "relationship: " + obo_id(m, p) + " " + obo_id(m, o) + "\n";
  }
  return out;
}

}  // namespace uoce::onto
