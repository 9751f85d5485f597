#include <stdexcept>

#include "uoce/ontology/serialize.hpp"

namespace uoce::onto {

std::string_view format_name(SerializationFormat f) {
  switch (f) {
    case SerializationFormat::JsonLd: return "jsonld";
    case SerializationFormat::Manchester: return "man";
    case SerializationFormat::Obo: return "obo";
    case SerializationFormat::OwlFunctional: return "owf";
    case SerializationFormat::OwlXml: return "owx";
    case SerializationFormat::RdfXml: return "rdfx";
    case SerializationFormat::Turtle: return "ttl";
  }
  return "";
}

std::optional<SerializationFormat> parse_format(std::string_view name) {
  for (SerializationFormat f : kAllFormats) {
    if (format_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view format_title(SerializationFormat f) {
  switch (f) {
    case SerializationFormat::JsonLd: return "JSON-LD";
    case SerializationFormat::Manchester: return "Manchester OWL Syntax";
    case SerializationFormat::Obo: return "OBO Format 1.4";
    case SerializationFormat::OwlFunctional: return "OWL Functional Syntax";
    case SerializationFormat::OwlXml: return "OWL/XML Syntax";
    case SerializationFormat::RdfXml: return "RDF/XML Syntax";
    case SerializationFormat::Turtle: return "Turtle";
  }
  return "";
}

std::string_view format_doc_url(SerializationFormat f) {
  switch (f) {
    case SerializationFormat::JsonLd: return "https://json-ld.org/";
    case SerializationFormat::Manchester: return "https://www.w3.org/TR/owl2-manchester-syntax/";
    case SerializationFormat::Obo:
      return "https://owlcollab.github.io/oboformat/doc/GO.format.obo-1_4.html";
    case SerializationFormat::OwlFunctional: return "https://www.w3.org/TR/owl2-syntax/";
    case SerializationFormat::OwlXml: return "https://www.w3.org/TR/owl-xmlsyntax/";
    case SerializationFormat::RdfXml: return "https://www.w3.org/TR/rdf-syntax-grammar/";
    case SerializationFormat::Turtle: return "https://www.w3.org/TR/turtle/";
  }
  return "";
}

bool format_supports_parse(SerializationFormat f) {
  return f == SerializationFormat::Turtle || f == SerializationFormat::JsonLd ||
         f == SerializationFormat::RdfXml;
}

bool format_is_lossy(SerializationFormat f) { return f == SerializationFormat::Obo; }

std::string serialize_graph(const Graph& graph, SerializationFormat format) {
  switch (format) {
    case SerializationFormat::JsonLd: return write_jsonld(graph);
    case SerializationFormat::Manchester: return write_manchester(graph);
    case SerializationFormat::Obo: return write_obo(graph);
    case SerializationFormat::OwlFunctional: return write_owl_functional(graph);
    case SerializationFormat::OwlXml: return write_owl_xml(graph);
    case SerializationFormat::RdfXml: return write_rdfxml(graph);
    case SerializationFormat::Turtle: return write_turtle(graph);
  }
  throw std::invalid_argument("unknown serialization format");
}

Graph parse_graph(std::string_view text, SerializationFormat format) {
  switch (format) {
    case SerializationFormat::Turtle: return read_turtle(text);
    case SerializationFormat::JsonLd: return read_jsonld(text);
    case SerializationFormat::RdfXml: return read_rdfxml(text);
    default:
      throw std::invalid_argument("parsing is not supported for format '" +
                                  std::string(format_name(format)) + "' (emit only)");
  }
}

}  // namespace uoce::onto
