#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "uoce/ontology/graph.hpp"

namespace uoce::onto {

inline constexpr std::string_view kDefaultSchemaBase = "http://example.org/uoc#";
inline constexpr std::string_view kDefaultInstanceBase = "http://example.org/uoc/data/";

/// Named pieces of the UOC schema. Local names are relative to the schema
/// base IRI.
namespace uoc {

struct ClassDef {
  std::string_view name;
  std::string_view label;
  std::string_view comment;
};

struct PropertyDef {
  std::string_view name;
  std::string_view domain;
  std::string_view range;  // class local name, or "xsd:string" for attributes
  std::string_view label;
};

struct IndividualDef {
  std::string_view name;
  std::string_view type;
  int rank;  // ordinal position within the enumeration, 1-based
};

std::span<const ClassDef> classes();
std::span<const PropertyDef> object_properties();
std::span<const PropertyDef> datatype_properties();
std::span<const IndividualDef> individuals();

/// Annotation property carrying the intensity ordering (weak=1 < average=2
/// < strong=3) and the polarity listing order.
inline constexpr std::string_view kRankProperty = "enumerationRank";

const PropertyDef* find_object_property(std::string_view name);
const PropertyDef* find_datatype_property(std::string_view name);

}  // namespace uoc

/// Schema graph: 12 classes, 11 object properties with domain and range,
/// 5 datatype attributes, and the 6 polarity/intensity individuals.
Graph build_uoc_schema(std::string_view schema_base = kDefaultSchemaBase);

/// IRI of a schema term, e.g. schema_iri(base, "Opinion").
std::string schema_iri(std::string_view schema_base, std::string_view local);

/// Ontology IRI: the schema base without its trailing '#' or '/'.
std::string ontology_iri(std::string_view schema_base);

struct DomainRange {
  std::string domain;
  std::string range;
};

/// Looks up rdfs:domain / rdfs:range of @p property_iri in @p graph.
std::optional<DomainRange> property_signature(const Graph& graph, std::string_view property_iri);

}  // namespace uoce::onto
