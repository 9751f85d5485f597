#include "uoce/ontology/instantiate.hpp"

#include <cstdio>

#include "uoce/core/normalize.hpp"
#include "uoce/core/validate.hpp"

namespace uoce::onto {

namespace {

std::string percent_encode(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    const bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

Term categorical(const std::string& value) {
  return looks_like_iri(value) ? Term::iri(value) : Term::literal(value);
}

}  // namespace

std::string instance_iri(const InstanceNaming& naming, std::string_view sentence_id,
                         std::string_view role, std::size_t ordinal) {
  return naming.instance_base + percent_encode(sentence_id) + "/" + std::string(role) + "/" +
         std::to_string(ordinal);
}

Graph instantiate_opinion(const OpinionTuple& tuple, const SentenceRecord& sentence,
                          std::size_t ordinal, const InstanceNaming& naming) {
  auto diags = validate_tuple(tuple, sentence.text);
  if (has_errors(diags)) {
    std::erase_if(diags, [](const Diagnostic& d) { return d.severity != Severity::Error; });
    const std::string what = "opinion " + std::to_string(ordinal) + " of sentence '" + sentence.id +
                             "' is invalid: " + format_diagnostic(diags.front());
    throw InvalidTupleError(what, std::move(diags));
  }

  Graph g;
  g.bind_prefix("uoc", naming.schema_base);
  g.bind_prefix("rdf", std::string(vocab::kRdf));
  g.bind_prefix("xsd", std::string(vocab::kXsd));

  const Term type = Term::iri(vocab::rdf("type"));
  auto uoc = [&](std::string_view local) { return Term::iri(schema_iri(naming.schema_base, local)); };
  auto node = [&](std::string_view role) {
    return Term::iri(instance_iri(naming, sentence.id, role, ordinal));
  };
  auto value = [&](Slot s) -> const std::string& { return *tuple.get(s); };

  const Term opinion = node("opinion");
  const Term sentiment = node("sentiment");
  const Term target = node("target");
  const Term aspect = node("aspect");
  const Term holder = node("holder");

  g.add(opinion, type, uoc("Opinion"));
  g.add(sentiment, type, uoc("Sentiment"));
  g.add(target, type, uoc("Target"));
  g.add(aspect, type, uoc("Aspect"));
  g.add(holder, type, uoc("Holder"));

  g.add(opinion, uoc("conveysSentiment"), sentiment);
  g.add(opinion, uoc("isExpressedOnTarget"), target);
  g.add(opinion, uoc("isHeldBy"), holder);

  g.add(sentiment, uoc("hasPolarity"), uoc(to_string(*tuple.polarity())));
  g.add(sentiment, uoc("hasIntensity"), uoc(to_string(*tuple.intensity())));
  if (tuple.has(Slot::SentimentExpression))
    g.add(sentiment, uoc("sentimentExpression"), Term::literal(value(Slot::SentimentExpression)));

  auto link_categorical = [&](const Term& subject, std::string_view property,
                              std::string_view range, Slot slot) {
    const Term object = categorical(value(slot));
    g.add(subject, uoc(property), object);
    if (object.is_iri()) g.add(object, type, uoc(range));
  };

  g.add(target, uoc("embodiesAspect"), aspect);
  link_categorical(target, "hasTargetEntity", "TargetEntity", Slot::TargetEntity);
  link_categorical(aspect, "hasAspectCategory", "AspectCategory", Slot::AspectCategory);
  if (tuple.has(Slot::AspectTerm))
    g.add(aspect, uoc("aspectTerm"), Term::literal(value(Slot::AspectTerm)));

  link_categorical(holder, "hasHolderEntity", "HolderEntity", Slot::HolderEntity);
  if (tuple.has(Slot::HolderSpan))
    g.add(holder, uoc("holderSpan"), Term::literal(value(Slot::HolderSpan)));

  if (tuple.has(Slot::Qualifier)) {
    const Term q = node("qualifier");
    g.add(q, type, uoc("Qualifier"));
    g.add(q, uoc("qualifierText"), Term::literal(value(Slot::Qualifier)));
    g.add(opinion, uoc("hasQualifier"), q);
  }
  if (tuple.has(Slot::Reason)) {
    const Term r = node("reason");
    g.add(r, type, uoc("Reason"));
    g.add(r, uoc("reasonText"), Term::literal(value(Slot::Reason)));
    g.add(opinion, uoc("hasReason"), r);
  }
  return g;
}

Graph instantiate_sentence(const SentenceRecord& sentence, const InstanceNaming& naming) {
  Graph g;
  for (std::size_t k = 0; k < sentence.opinions.size(); ++k)
    g.merge(instantiate_opinion(sentence.opinions[k], sentence, k, naming));
  return g;
}

}  // namespace uoce::onto
