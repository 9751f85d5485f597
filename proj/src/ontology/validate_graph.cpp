#include <map>

#include "uoce/ontology/instantiate.hpp"

namespace uoce::onto {

namespace {

bool is_enumeration_range(std::string_view range) {
  return range == "SentimentPolarity" || range == "SentimentIntensity";
}

bool is_categorical_range(std::string_view range) {
  return range == "TargetEntity" || range == "AspectCategory" || range == "HolderEntity";
}

Diagnostic violation(std::string code, std::string message, const Triple& t) {
  return {Severity::Error, std::move(code), std::move(message),
          to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object)};
}

}  // namespace

std::vector<Diagnostic> validate_graph(const Graph& graph, std::string_view schema_base) {
  std::vector<Diagnostic> out;
  const Term type = Term::iri(vocab::rdf("type"));
  auto uoc_iri = [&](std::string_view local) { return schema_iri(schema_base, local); };

  // Enumeration membership comes from the schema table, so instance graphs
  // validate without the schema merged in.
  std::map<std::string, std::string_view> enum_members;
  for (const uoc::IndividualDef& i : uoc::individuals()) enum_members[uoc_iri(i.name)] = i.type;

  auto typed_as = [&](const Term& node, std::string_view cls) {
    return graph.has_type(node, uoc_iri(cls));
  };
  auto has_any_type = [&](const Term& node) { return !graph.objects(node, type).empty(); };

  std::map<Term, std::size_t> sentiment_edges;
  std::map<Term, std::size_t> target_edges;

  for (const Triple& t : graph.triples()) {
    const std::string& p = t.predicate.value;
    if (p.size() <= schema_base.size() || p.compare(0, schema_base.size(), schema_base) != 0)
      continue;
    const std::string_view local = std::string_view(p).substr(schema_base.size());

    if (const uoc::PropertyDef* def = uoc::find_object_property(local)) {
      if (!typed_as(t.subject, def->domain)) {
        out.push_back(violation("domain",
                                std::string(local) + " subject is not a " +
                                    std::string(def->domain),
                                t));
      }
      if (is_enumeration_range(def->range)) {
        const auto member = t.object.is_iri() ? enum_members.find(t.object.value)
                                              : enum_members.end();
        if (member == enum_members.end() || member->second != def->range) {
          out.push_back(violation("range",
                                  std::string(local) + " must point to a " +
                                      std::string(def->range) + " individual",
                                  t));
        }
      } else if (is_categorical_range(def->range)) {
        const bool string_literal = t.object.is_literal() && t.object.lang.empty() &&
                                    t.object.datatype == vocab::xsd("string");
        const bool resource = !t.object.is_literal() &&
                              (!has_any_type(t.object) || typed_as(t.object, def->range));
        if (!string_literal && !resource) {
          out.push_back(violation("range",
                                  std::string(local) + " must be a string or a " +
                                      std::string(def->range) + " resource",
                                  t));
        }
      } else if (t.object.is_literal() || !typed_as(t.object, def->range)) {
        out.push_back(violation("range",
                                std::string(local) + " object is not a " + std::string(def->range),
                                t));
      }
      if (local == "conveysSentiment") ++sentiment_edges[t.subject];
      if (local == "isExpressedOnTarget") ++target_edges[t.subject];
    } else if (const uoc::PropertyDef* attr = uoc::find_datatype_property(local)) {
      if (!typed_as(t.subject, attr->domain)) {
        out.push_back(violation("domain",
                                std::string(local) + " subject is not a " +
                                    std::string(attr->domain),
                                t));
      }
      if (!t.object.is_literal()) {
        out.push_back(violation("range", std::string(local) + " value must be a literal", t));
      }
    }
  }

  for (const Term& opinion : graph.subjects(type, Term::iri(uoc_iri("Opinion")))) {
    auto check = [&](const std::map<Term, std::size_t>& counts, std::string_view property) {
      const auto it = counts.find(opinion);
      const std::size_t n = it == counts.end() ? 0 : it->second;
      if (n != 1) {
        out.push_back({Severity::Error, "cardinality",
                       "Opinion must have exactly one " + std::string(property) + " edge, found " +
                           std::to_string(n),
                       to_string(opinion)});
      }
    };
    check(sentiment_edges, "conveysSentiment");
    check(target_edges, "isExpressedOnTarget");
  }
  return out;
}

}  // namespace uoce::onto
