#include <gtest/gtest.h>

#include <random>

#include "support/tuples.hpp"
#include "uoce/core/normalize.hpp"
#include "uoce/core/opinion.hpp"
#include "uoce/core/validate.hpp"

using namespace uoce;
using namespace uoce::testing;

TEST(NormalizeValue, TrimsCollapsesAndFolds) {
  EXPECT_EQ(normalize_value("  Battery  Life "), "battery life");
  EXPECT_EQ(normalize_value("POSITIVE"), "positive");
  EXPECT_EQ(normalize_value("a\t\n b"), "a b");
}

TEST(NormalizeValue, NullSpellingsAreAbsent) {
  for (const char* raw : {"N/A", "n/a", "NA", "None", "", "   ", " n/a "}) {
    EXPECT_FALSE(normalize_value(raw).has_value()) << "'" << raw << "'";
  }
  EXPECT_EQ(normalize_value("nan"), "nan");
  EXPECT_EQ(normalize_value("not applicable"), "not applicable");
}

TEST(NormalizeValue, UnicodeComposedAndFolded) {
  // "e" + combining acute composes to U+00E9; "Straße" folds to "strasse".
  EXPECT_EQ(normalize_value("Cafe\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(normalize_value("Stra\xC3\x9F" "e"), "strasse");
  // No-break space counts as whitespace.
  EXPECT_EQ(normalize_value("a\xC2\xA0\xC2\xA0" "b"), "a b");
}

TEST(NormalizeValue, IdempotentOnRandomStrings) {
  const std::vector<std::string> pieces = {
      "A", "b", " ", "  ", "\t", "\xC3\x89", "e\xCC\x81", "\xC3\x9F", "\xEF\xAC\x81", "\xCE\xA3",
      "\xE1\xBA\x9E", "I", "\xC4\xB0", "n/a", "\xC2\xA0", "\xE2\x80\x83", "x", "-", "#",
      "\xCC\x88", "\xC7\x85"};
  std::mt19937 rng(7);
  for (int iter = 0; iter < 5000; ++iter) {
    std::string s;
    const int len = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < len; ++k)
      s += pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
    const auto once = normalize_value(s);
    if (!once) continue;
    EXPECT_EQ(normalize_value(*once), once) << "input: " << s;
  }
}

TEST(LooksLikeIri, AbsoluteIrisOnly) {
  EXPECT_TRUE(looks_like_iri("http://dbpedia.org/resource/Laptop"));
  EXPECT_TRUE(looks_like_iri("urn:isbn:0451450523"));
  EXPECT_FALSE(looks_like_iri("food:quality"));
  EXPECT_FALSE(looks_like_iri("battery#operational_performance"));
  EXPECT_FALSE(looks_like_iri("http://a b"));
  EXPECT_FALSE(looks_like_iri("laptop"));
}

TEST(OpinionTuple, SetNormalizesAndCountsPresent) {
  OpinionTuple t;
  t.set(Slot::SentimentPolarity, " Positive ");
  t.set(Slot::Qualifier, "N/A");
  EXPECT_EQ(t.get(Slot::SentimentPolarity), "positive");
  EXPECT_FALSE(t.has(Slot::Qualifier));
  EXPECT_EQ(t.present_count(), 1u);
  EXPECT_EQ(t.polarity(), Polarity::Positive);
  EXPECT_FALSE(t.intensity().has_value());
}

TEST(SlotKeys, RoundTripAndOrder) {
  std::string keys;
  for (Slot s : kAllSlots) {
    keys += std::string(slot_key(s)) + " ";
    EXPECT_EQ(slot_from_key(slot_key(s)), s);
  }
  EXPECT_EQ(keys, "at ac te se sp si hs he q r ");
  EXPECT_FALSE(slot_from_key("ap").has_value());
}

TEST(TaskKind, SlotSubsetsNest) {
  for (Slot s : task_slots(TaskKind::ASTE)) EXPECT_TRUE(task_has_slot(TaskKind::ACOS, s));
  for (Slot s : task_slots(TaskKind::ACOS)) EXPECT_TRUE(task_has_slot(TaskKind::UOCE, s));
  EXPECT_EQ(task_slots(TaskKind::ASTE).size(), 3u);
  EXPECT_EQ(task_slots(TaskKind::ACOS).size(), 5u);
  EXPECT_EQ(task_slots(TaskKind::UOCE).size(), 10u);
}

TEST(ProjectTuple, AsteKeepsTermPolarityExpression) {
  const OpinionTuple p = project_tuple(battery_tuple(), TaskKind::ASTE);
  EXPECT_EQ(p.present_count(), 3u);
  EXPECT_EQ(p.get(Slot::AspectTerm), "battery life");
  EXPECT_EQ(p.get(Slot::SentimentPolarity), "negative");
  EXPECT_EQ(p.get(Slot::SentimentExpression), "hoped for better");
}

TEST(ProjectTuple, AcosKeepsFiveSlots) {
  const OpinionTuple p = project_tuple(battery_tuple(), TaskKind::ACOS);
  EXPECT_EQ(p.present_count(), 5u);
  EXPECT_EQ(p.get(Slot::TargetEntity), "laptop");
  EXPECT_EQ(p.get(Slot::AspectCategory), "battery#operational_performance");
  EXPECT_EQ(p.get(Slot::AspectTerm), "battery life");
  EXPECT_FALSE(p.has(Slot::Qualifier));
}

TEST(ProjectTuple, UoceIsIdentityAndProjectionsCompose) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const OpinionTuple t = random_tuple(rng);
    EXPECT_EQ(project_tuple(t, TaskKind::UOCE), t);
    EXPECT_EQ(project_tuple(project_tuple(t, TaskKind::ACOS), TaskKind::ASTE),
              project_tuple(t, TaskKind::ASTE));
  }
}

TEST(ValidateTuple, BatteryTupleIsClean) {
  EXPECT_TRUE(validate_tuple(battery_tuple(), kBatterySentence).empty());
}

TEST(ValidateTuple, BadPolarityIsOneError) {
  OpinionTuple t = battery_tuple();
  t.set(Slot::SentimentPolarity, "pos");
  const auto diags = validate_tuple(t, kBatterySentence);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].severity, Severity::Error);
  EXPECT_EQ(diags[0].code, "enumeration");
}

TEST(ValidateTuple, BadIntensityIsOneError) {
  OpinionTuple t = battery_tuple();
  t.set(Slot::SentimentIntensity, "very strong");
  const auto diags = validate_tuple(t, kBatterySentence);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].location, "si");
}

TEST(ValidateTuple, UnmatchedSpanIsOneWarning) {
  OpinionTuple t = battery_tuple();
  t.set(Slot::Qualifier, "doing light work");
  const auto diags = validate_tuple(t, kBatterySentence);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].severity, Severity::Warning);
  EXPECT_EQ(diags[0].code, "span-not-found");
}

TEST(ValidateTuple, MissingRequiredSlotsAreErrors) {
  OpinionTuple t = battery_tuple();
  t.clear(Slot::TargetEntity).clear(Slot::HolderEntity);
  const auto diags = validate_tuple(t, kBatterySentence);
  EXPECT_EQ(count_severity(diags, Severity::Error), 2u);
  EXPECT_EQ(count_severity(diags, Severity::Warning), 0u);
}

TEST(ValidateTuple, SpanCheckIsCaseAndSpacingInsensitive) {
  OpinionTuple t = battery_tuple();
  t.set(Slot::AspectTerm, "BATTERY   LIFE");
  EXPECT_TRUE(validate_tuple(t, kBatterySentence).empty());
}

TEST(Domain, ParseIsCaseInsensitive) {
  EXPECT_EQ(parse_domain("laptop"), Domain::Laptop);
  EXPECT_EQ(parse_domain("Restaurant"), Domain::Restaurant);
  EXPECT_FALSE(parse_domain("Electronics").has_value());
}
