#pragma once

// Helpers shared by the serializers. Not installed.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/ontology/graph.hpp"

namespace uoce::onto::detail {

/// Triples of one subject, rdf:type objects first, then predicates in order.
struct SubjectBlock {
  Term subject;
  std::vector<Term> types;
  std::vector<std::pair<Term, std::vector<Term>>> properties;
};

std::vector<SubjectBlock> group_by_subject(const Graph& g);

/// prefix:local when some bound namespace covers @p iri and the remainder is
/// a safe local name; the longest namespace wins.
std::optional<std::string> compact_iri(const std::map<std::string, std::string>& prefixes,
                                       std::string_view iri);

/// Splits an IRI after its last '#' or '/' when the remainder is a valid XML
/// NCName.
std::optional<std::pair<std::string, std::string>> split_ncname(std::string_view iri);

bool is_ncname(std::string_view s);

std::string escape_xml(std::string_view s, bool attribute);

/// Double-quoted string body with backslash escapes (Turtle / functional
/// syntax style).
std::string escape_quoted(std::string_view s);

void append_utf8(std::string& out, char32_t cp);

/// 1-based line and column of byte @p offset.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset);

/// Resolves a relative reference against @p base (simple subset of RFC 3986
/// sufficient for fragment, absolute-path and relative-path references).
std::string resolve_iri(std::string_view base, std::string_view ref);

bool has_scheme(std::string_view iri);

}  // namespace uoce::onto::detail
