#include "owl_model.hpp"

namespace uoce::onto::detail {

std::vector<Term> OwlModel::of_kind(EntityKind kind) const {
  std::set<Term> out;
  for (const auto& [t, ks] : kinds) {
    if (ks.contains(kind)) out.insert(t);
  }
  if (kind == EntityKind::Individual) {
    for (const auto& [t, info] : entities) {
      if (!kinds.contains(t)) out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

const EntityInfo* OwlModel::info(const Term& entity) const {
  const auto it = entities.find(entity);
  return it == entities.end() ? nullptr : &it->second;
}

bool OwlModel::has_kind(const Term& entity, EntityKind kind) const {
  const auto it = kinds.find(entity);
  return it != kinds.end() && it->second.contains(kind);
}

OwlModel build_owl_model(const Graph& g) {
  OwlModel m;
  m.prefixes = g.prefixes();

  const std::string type = vocab::rdf("type");
  const std::map<std::string, EntityKind> declaring = {
      {vocab::owl("Class"), EntityKind::Class},
      {vocab::rdfs("Class"), EntityKind::Class},
      {vocab::owl("ObjectProperty"), EntityKind::ObjectProperty},
      {vocab::owl("DatatypeProperty"), EntityKind::DataProperty},
      {vocab::owl("AnnotationProperty"), EntityKind::AnnotationProperty},
      {vocab::owl("NamedIndividual"), EntityKind::Individual},
      {vocab::rdfs("Datatype"), EntityKind::Datatype},
  };
  const std::set<std::string> builtin_annotations = {
      vocab::rdfs("label"),      vocab::rdfs("comment"),      vocab::rdfs("seeAlso"),
      vocab::rdfs("isDefinedBy"), vocab::owl("versionInfo"), vocab::owl("deprecated"),
  };

  std::set<Term> ontologies;
  for (const Triple& t : g.triples()) {
    if (t.predicate.value != type || !t.object.is_iri()) continue;
    if (t.object.value == vocab::owl("Ontology")) {
      ontologies.insert(t.subject);
      continue;
    }
    if (const auto d = declaring.find(t.object.value); d != declaring.end())
      m.kinds[t.subject].insert(d->second);
  }
  if (!ontologies.empty() && ontologies.begin()->is_iri()) m.ontology = ontologies.begin()->value;

  auto is_annotation = [&](const Term& p) {
    return builtin_annotations.contains(p.value) || m.has_kind(p, EntityKind::AnnotationProperty);
  };

  for (const Triple& t : g.triples()) {
    const Term& s = t.subject;
    const Term& p = t.predicate;
    const Term& o = t.object;
    if (ontologies.contains(s)) {
      if (!(p.value == type && o.is_iri() && o.value == vocab::owl("Ontology")))
        m.ontology_annotations.emplace_back(p, o);
      continue;
    }
    EntityInfo& info = m.entities[s];
    if (p.value == type && !o.is_literal()) {
      if (o.is_iri() && declaring.contains(o.value)) continue;
      info.types.push_back(o);
      if (o.is_iri()) m.kinds[o].insert(EntityKind::Class);
      if (s.is_iri()) m.kinds[s].insert(EntityKind::Individual);
      continue;
    }
    if (p.value == vocab::rdfs("subClassOf")) {
      info.superclasses.push_back(o);
      continue;
    }
    if (p.value == vocab::rdfs("domain")) {
      info.domains.push_back(o);
      continue;
    }
    if (p.value == vocab::rdfs("range")) {
      info.ranges.push_back(o);
      continue;
    }
    if (is_annotation(p)) {
      info.annotations.emplace_back(p, o);
      continue;
    }
    if (o.is_literal()) {
      // A literal on an object property (categorical text) has no OWL
      // reading as a fact; keep it as an annotation.
      if (m.has_kind(p, EntityKind::ObjectProperty)) {
        info.annotations.emplace_back(p, o);
        continue;
      }
      info.data_facts.emplace_back(p, o);
      if (!m.kinds.contains(p)) m.kinds[p].insert(EntityKind::DataProperty);
    } else {
      if (m.has_kind(p, EntityKind::DataProperty)) {
        info.annotations.emplace_back(p, o);
        continue;
      }
      info.object_facts.emplace_back(p, o);
      if (!m.kinds.contains(p)) m.kinds[p].insert(EntityKind::ObjectProperty);
      if (o.is_iri() && !m.kinds.contains(o)) m.kinds[o].insert(EntityKind::Individual);
    }
    if (s.is_iri() && !m.kinds.contains(s)) m.kinds[s].insert(EntityKind::Individual);
  }
  // Datatypes used as ranges of data properties.
  for (const auto& [s, info] : m.entities) {
    if (!m.has_kind(s, EntityKind::DataProperty)) continue;
    for (const Term& r : info.ranges) {
      if (r.is_iri()) m.kinds[r].insert(EntityKind::Datatype);
    }
  }
  return m;
}

}  // namespace uoce::onto::detail
