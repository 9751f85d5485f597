#include "uoce/ontology/schema.hpp"

#include <algorithm>

namespace uoce::onto {

namespace uoc {

namespace {

constexpr std::array<ClassDef, 12> kClasses = {{
    {"Opinion", "Opinion", "A single opinion found in a text: a sentiment directed at a target, held by a holder, optionally scoped by a qualifier and justified by a reason."},
    {"Sentiment", "Sentiment", "The feeling conveyed by an opinion, made of a polarity, an intensity and the expression that signals it."},
    {"Target", "Target", "What the opinion is about: a target entity together with the aspect being evaluated."},
    {"Aspect", "Aspect", "The part or attribute of the target entity that is evaluated, given by an aspect category and an optional aspect term."},
    {"Holder", "Holder", "Whoever holds the opinion, given by a holder entity and an optional holder span."},
    {"Qualifier", "Qualifier", "Text that limits the opinion to a group, subgroup or condition."},
    {"Reason", "Reason", "Text that states an explicit justification or cause for the opinion."},
    {"SentimentPolarity", "Sentiment Polarity", "Orientation of a sentiment: positive, negative or neutral."},
    {"SentimentIntensity", "Sentiment Intensity", "Strength of a sentiment on the ordinal scale weak < average < strong."},
    {"TargetEntity", "Target Entity", "The product, service, topic, person, organisation or event an opinion is about; a string or an IRI."},
    {"AspectCategory", "Aspect Category", "Label naming the evaluated attribute of the target; a string or an IRI."},
    {"HolderEntity", "Holder Entity", "Canonical label for the person or organisation expressing the opinion."},
}};

constexpr std::array<PropertyDef, 11> kObjectProperties = {{
    {"conveysSentiment", "Opinion", "Sentiment", "conveys sentiment"},
    {"isExpressedOnTarget", "Opinion", "Target", "is expressed on target"},
    {"isHeldBy", "Opinion", "Holder", "is held by"},
    {"hasQualifier", "Opinion", "Qualifier", "has qualifier"},
    {"hasReason", "Opinion", "Reason", "has reason"},
    {"hasIntensity", "Sentiment", "SentimentIntensity", "has intensity"},
    {"hasPolarity", "Sentiment", "SentimentPolarity", "has polarity"},
    {"hasTargetEntity", "Target", "TargetEntity", "has target entity"},
    {"embodiesAspect", "Target", "Aspect", "embodies aspect"},
    {"hasAspectCategory", "Aspect", "AspectCategory", "has aspect category"},
    {"hasHolderEntity", "Holder", "HolderEntity", "has holder entity"},
}};

constexpr std::array<PropertyDef, 5> kDatatypeProperties = {{
    {"sentimentExpression", "Sentiment", "xsd:string", "sentiment expression"},
    {"aspectTerm", "Aspect", "xsd:string", "aspect term"},
    {"holderSpan", "Holder", "xsd:string", "holder span"},
    {"qualifierText", "Qualifier", "xsd:string", "qualifier text"},
    {"reasonText", "Reason", "xsd:string", "reason text"},
}};

constexpr std::array<IndividualDef, 6> kIndividuals = {{
    {"positive", "SentimentPolarity", 1},
    {"negative", "SentimentPolarity", 2},
    {"neutral", "SentimentPolarity", 3},
    {"weak", "SentimentIntensity", 1},
    {"average", "SentimentIntensity", 2},
    {"strong", "SentimentIntensity", 3},
}};

}  // namespace

std::span<const ClassDef> classes() { return kClasses; }
std::span<const PropertyDef> object_properties() { return kObjectProperties; }
std::span<const PropertyDef> datatype_properties() { return kDatatypeProperties; }
std::span<const IndividualDef> individuals() { return kIndividuals; }

const PropertyDef* find_object_property(std::string_view name) {
  auto it = std::find_if(kObjectProperties.begin(), kObjectProperties.end(),
                         [&](const PropertyDef& p) { return p.name == name; });
  return it == kObjectProperties.end() ? nullptr : &*it;
}

const PropertyDef* find_datatype_property(std::string_view name) {
  auto it = std::find_if(kDatatypeProperties.begin(), kDatatypeProperties.end(),
                         [&](const PropertyDef& p) { return p.name == name; });
  return it == kDatatypeProperties.end() ? nullptr : &*it;
}

}  // namespace uoc

std::string schema_iri(std::string_view schema_base, std::string_view local) {
  return std::string(schema_base) + std::string(local);
}

std::string ontology_iri(std::string_view schema_base) {
  std::string out(schema_base);
  while (!out.empty() && (out.back() == '#' || out.back() == '/')) out.pop_back();
  return out;
}

Graph build_uoc_schema(std::string_view schema_base) {
  Graph g;
  g.bind_prefix("owl", std::string(vocab::kOwl));
  g.bind_prefix("rdf", std::string(vocab::kRdf));
  g.bind_prefix("rdfs", std::string(vocab::kRdfs));
  g.bind_prefix("xsd", std::string(vocab::kXsd));
  g.bind_prefix("uoc", std::string(schema_base));

  const Term type = Term::iri(vocab::rdf("type"));
  const Term label = Term::iri(vocab::rdfs("label"));
  const Term comment = Term::iri(vocab::rdfs("comment"));
  const Term domain = Term::iri(vocab::rdfs("domain"));
  const Term range = Term::iri(vocab::rdfs("range"));
  auto uoc = [&](std::string_view local) { return Term::iri(schema_iri(schema_base, local)); };

  const Term ontology = Term::iri(ontology_iri(schema_base));
  g.add(ontology, type, Term::iri(vocab::owl("Ontology")));
  g.add(ontology, label, Term::literal("Unified Opinion Concepts"));

  for (const uoc::ClassDef& c : uoc::classes()) {
    g.add(uoc(c.name), type, Term::iri(vocab::owl("Class")));
    g.add(uoc(c.name), label, Term::literal(std::string(c.label)));
    g.add(uoc(c.name), comment, Term::literal(std::string(c.comment)));
  }
  for (const uoc::PropertyDef& p : uoc::object_properties()) {
    g.add(uoc(p.name), type, Term::iri(vocab::owl("ObjectProperty")));
    g.add(uoc(p.name), label, Term::literal(std::string(p.label)));
    g.add(uoc(p.name), domain, uoc(p.domain));
    g.add(uoc(p.name), range, uoc(p.range));
  }
  for (const uoc::PropertyDef& p : uoc::datatype_properties()) {
    g.add(uoc(p.name), type, Term::iri(vocab::owl("DatatypeProperty")));
    g.add(uoc(p.name), label, Term::literal(std::string(p.label)));
    g.add(uoc(p.name), domain, uoc(p.domain));
    g.add(uoc(p.name), range, Term::iri(vocab::xsd("string")));
  }

  const Term rank = uoc(uoc::kRankProperty);
  g.add(rank, type, Term::iri(vocab::owl("AnnotationProperty")));
  g.add(rank, label, Term::literal("enumeration rank"));
  g.add(rank, comment,
        Term::literal("Ordinal position of a value within its enumeration; for intensity, a "
                      "lower rank means a weaker sentiment."));
  for (const uoc::IndividualDef& i : uoc::individuals()) {
    g.add(uoc(i.name), type, Term::iri(vocab::owl("NamedIndividual")));
    g.add(uoc(i.name), type, uoc(i.type));
    g.add(uoc(i.name), label, Term::literal(std::string(i.name)));
    g.add(uoc(i.name), rank, Term::typed(std::to_string(i.rank), vocab::xsd("integer")));
  }
  return g;
}

std::optional<DomainRange> property_signature(const Graph& graph, std::string_view property_iri) {
  const Term p = Term::iri(std::string(property_iri));
  const auto d = graph.objects(p, Term::iri(vocab::rdfs("domain")));
  const auto r = graph.objects(p, Term::iri(vocab::rdfs("range")));
  if (d.size() != 1 || r.size() != 1) return std::nullopt;
  return DomainRange{d.front().value, r.front().value};
}

}  // namespace uoce::onto
