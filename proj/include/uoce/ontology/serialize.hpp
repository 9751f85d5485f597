#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "uoce/ontology/graph.hpp"

namespace uoce::onto {

enum class SerializationFormat { JsonLd, Manchester, Obo, OwlFunctional, OwlXml, RdfXml, Turtle };

inline constexpr std::array<SerializationFormat, 7> kAllFormats = {
    SerializationFormat::JsonLd,        SerializationFormat::Manchester,
    SerializationFormat::Obo,           SerializationFormat::OwlFunctional,
    SerializationFormat::OwlXml,        SerializationFormat::RdfXml,
    SerializationFormat::Turtle};

/// Short names: jsonld, man, obo, owf, owx, rdfx, ttl.
std::string_view format_name(SerializationFormat f);
std::optional<SerializationFormat> parse_format(std::string_view name);
std::string_view format_title(SerializationFormat f);
std::string_view format_doc_url(SerializationFormat f);

/// Only ttl, jsonld and rdfx can be read back.
bool format_supports_parse(SerializationFormat f);
/// OBO drops literal-valued assertions other than names and definitions.
bool format_is_lossy(SerializationFormat f);

/// Deterministic text for @p graph: prefixes, subjects, predicates and
/// objects always appear in sorted order.
std::string serialize_graph(const Graph& graph, SerializationFormat format);

/// Throws ParseError on malformed input and std::invalid_argument for
/// emit-only formats.
Graph parse_graph(std::string_view text, SerializationFormat format);

// Per-format entry points.
std::string write_turtle(const Graph& g);
Graph read_turtle(std::string_view text);
std::string write_jsonld(const Graph& g);
Graph read_jsonld(std::string_view text);
std::string write_rdfxml(const Graph& g);
Graph read_rdfxml(std::string_view text);
std::string write_manchester(const Graph& g);
std::string write_owl_functional(const Graph& g);
std::string write_owl_xml(const Graph& g);
std::string write_obo(const Graph& g);

}  // namespace uoce::onto
