#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uoce/core/opinion.hpp"

namespace uoce::testing {

inline OpinionTuple make_tuple(std::initializer_list<std::pair<Slot, const char*>> values) {
  OpinionTuple t;
  for (const auto& [slot, v] : values) t.set(slot, v);
  return t;
}

inline constexpr const char* kBatterySentence =
    "I had hoped for better battery life , as it had only about 2-1/2 hours doing heavy "
    "computations (8 threads using 100 % of the CPU) .";

inline OpinionTuple battery_tuple() {
  return make_tuple({{Slot::AspectTerm, "battery life"},
                     {Slot::AspectCategory, "Battery#Operational_Performance"},
                     {Slot::TargetEntity, "laptop"},
                     {Slot::SentimentExpression, "hoped for better"},
                     {Slot::SentimentPolarity, "negative"},
                     {Slot::SentimentIntensity, "average"},
                     {Slot::HolderSpan, "I"},
                     {Slot::HolderEntity, "author"},
                     {Slot::Qualifier, "doing heavy computations"},
                     {Slot::Reason, "it had only about 2-1/2 hours"}});
}

inline constexpr const char* kBostonSentence =
    "By far one of the best locations you could stay at in Boston .";

// Gold and model outputs for the Boston sentence, column by column.
inline OpinionTuple boston_gold() {
  return make_tuple({{Slot::AspectTerm, "N/A"},
                     {Slot::AspectCategory, "general"},
                     {Slot::TargetEntity, "location"},
                     {Slot::SentimentExpression, "one of the best"},
                     {Slot::SentimentPolarity, "positive"},
                     {Slot::SentimentIntensity, "strong"},
                     {Slot::HolderSpan, "N/A"},
                     {Slot::HolderEntity, "author"},
                     {Slot::Qualifier, "stay at in Boston"},
                     {Slot::Reason, "N/A"}});
}

inline OpinionTuple boston_nlprompt() {
  return make_tuple({{Slot::AspectTerm, "locations"},
                     {Slot::AspectCategory, "general"},
                     {Slot::TargetEntity, "place"},
                     {Slot::SentimentExpression, "one of the best"},
                     {Slot::SentimentPolarity, "positive"},
                     {Slot::SentimentIntensity, "strong"},
                     {Slot::HolderSpan, "N/A"},
                     {Slot::HolderEntity, "author"},
                     {Slot::Qualifier, "you could stay at in Boston"},
                     {Slot::Reason, "N/A"}});
}

inline OpinionTuple boston_ontoprompt() {
  return make_tuple({{Slot::AspectTerm, "location"},
                     {Slot::AspectCategory, "general"},
                     {Slot::TargetEntity, "location"},
                     {Slot::SentimentExpression, "one of the best"},
                     {Slot::SentimentPolarity, "positive"},
                     {Slot::SentimentIntensity, "strong"},
                     {Slot::HolderSpan, "N/A"},
                     {Slot::HolderEntity, "author"},
                     {Slot::Qualifier, "N/A"},
                     {Slot::Reason, "N/A"}});
}

/// Random valid tuple drawn from small per-slot vocabularies, so that
/// collisions (and therefore partial agreement) are common.
inline OpinionTuple random_tuple(std::mt19937& rng) {
  static const std::vector<std::string> ac = {"general", "quality", "price", "service"};
  static const std::vector<std::string> te = {"laptop", "hotel", "food", "book"};
  static const std::vector<std::string> he = {"author", "other", "reviewer"};
  static const std::vector<std::string> spans = {"battery life", "great", "the staff",
                                                 "too slow", "for kids", "because it broke"};
  static const std::vector<std::string> pol = {"positive", "negative", "neutral"};
  static const std::vector<std::string> inten = {"weak", "average", "strong"};

  auto pick = [&rng](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto maybe = [&rng, &pick](const std::vector<std::string>& v) -> std::string {
    return std::bernoulli_distribution(0.6)(rng) ? pick(v) : std::string("N/A");
  };

  OpinionTuple t;
  t.set(Slot::AspectTerm, maybe(spans));
  t.set(Slot::AspectCategory, pick(ac));
  t.set(Slot::TargetEntity, pick(te));
  t.set(Slot::SentimentExpression, maybe(spans));
  t.set(Slot::SentimentPolarity, pick(pol));
  t.set(Slot::SentimentIntensity, pick(inten));
  t.set(Slot::HolderSpan, maybe(spans));
  t.set(Slot::HolderEntity, pick(he));
  t.set(Slot::Qualifier, maybe(spans));
  t.set(Slot::Reason, maybe(spans));
  return t;
}

/// Copy of @p t with a few slots resampled.
inline OpinionTuple perturb(const OpinionTuple& t, std::mt19937& rng, int changes) {
  OpinionTuple out = t;
  const OpinionTuple donor = random_tuple(rng);
  for (int k = 0; k < changes; ++k) {
    const Slot s = kAllSlots[std::uniform_int_distribution<std::size_t>(0, kSlotCount - 1)(rng)];
    const auto& v = donor.get(s);
    if (v) out.set(s, *v);
    else out.clear(s);
  }
  return out;
}

}  // namespace uoce::testing
