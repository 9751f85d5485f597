#pragma once

// Axiom-level view of a triple set, shared by the Manchester, functional,
// OWL/XML and OBO writers.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "uoce/ontology/graph.hpp"

namespace uoce::onto::detail {

enum class EntityKind { AnnotationProperty, Datatype, ObjectProperty, DataProperty, Class, Individual };

struct EntityInfo {
  std::vector<std::pair<Term, Term>> annotations;  // (property, value)
  std::vector<Term> superclasses;
  std::vector<Term> domains;
  std::vector<Term> ranges;
  std::vector<Term> types;
  std::vector<std::pair<Term, Term>> object_facts;  // (property, individual)
  std::vector<std::pair<Term, Term>> data_facts;    // (property, literal)
};

struct OwlModel {
  std::map<std::string, std::string> prefixes;
  std::string ontology;  // empty when the graph names no owl:Ontology
  std::vector<std::pair<Term, Term>> ontology_annotations;
  std::map<Term, std::set<EntityKind>> kinds;
  std::map<Term, EntityInfo> entities;

  /// Every entity of @p kind, in term order. Entities with axioms but no
  /// declaration count as individuals.
  std::vector<Term> of_kind(EntityKind kind) const;
  const EntityInfo* info(const Term& entity) const;
  bool has_kind(const Term& entity, EntityKind kind) const;
};

OwlModel build_owl_model(const Graph& g);

}  // namespace uoce::onto::detail
