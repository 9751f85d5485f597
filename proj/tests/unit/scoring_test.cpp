#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/tuples.hpp"
#include "uoce/metrics/scoring.hpp"

using namespace uoce;
using namespace uoce::metrics;
using namespace uoce::testing;

namespace {

Corpus random_gold(std::mt19937& rng, int sentences) {
  Corpus gold;
  for (int s = 0; s < sentences; ++s) {
    std::vector<OpinionTuple> set;
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < n; ++k) set.push_back(random_tuple(rng));
    gold.emplace("s" + std::to_string(s), std::move(set));
  }
  return gold;
}

// Predictions: perturbed copies of gold, dropped tuples, spurious extras.
Corpus random_predictions(const Corpus& gold, std::mt19937& rng) {
  Corpus pred;
  for (const auto& [id, set] : gold) {
    std::vector<OpinionTuple> out;
    for (const OpinionTuple& g : set) {
      if (std::bernoulli_distribution(0.15)(rng)) continue;
      const int changes = std::uniform_int_distribution<int>(0, 3)(rng);
      out.push_back(perturb(g, rng, changes));
    }
    if (std::bernoulli_distribution(0.3)(rng)) out.push_back(random_tuple(rng));
    pred.emplace(id, std::move(out));
  }
  return pred;
}

}  // namespace

TEST(Agreement, BostonNlPromptIsFiveSevenths) {
  EXPECT_EQ(boston_gold().present_count(), 7u);
  EXPECT_EQ(agreement_fraction(boston_nlprompt(), boston_gold()), Fraction(5, 7));
  EXPECT_NEAR(agreement(boston_nlprompt(), boston_gold()), 0.714, 5e-4);
}

TEST(Agreement, BostonOntoPromptIsSixSevenths) {
  EXPECT_EQ(agreement_fraction(boston_ontoprompt(), boston_gold()), Fraction(6, 7));
  EXPECT_NEAR(agreement(boston_ontoprompt(), boston_gold()), 0.857, 5e-4);
}

TEST(Agreement, IdenticalAndDegenerateTuples) {
  EXPECT_EQ(agreement_fraction(battery_tuple(), battery_tuple()), Fraction::integer(1));
  const OpinionTuple empty;
  EXPECT_EQ(agreement_fraction(empty, empty), Fraction::integer(1));
  EXPECT_EQ(agreement_fraction(battery_tuple(), empty), Fraction::integer(0));
}

TEST(Agreement, SpuriousPredictedSlotsAreFree) {
  OpinionTuple pred = boston_gold();
  pred.set(Slot::Reason, "because");
  EXPECT_EQ(agreement_fraction(pred, boston_gold()), Fraction::integer(1));
}

TEST(ComponentScores, IdenticalPredictionsScorePerfect) {
  const Corpus gold{{"a", {battery_tuple()}}, {"b", {boston_gold(), boston_ontoprompt()}}};
  const ScoreReport r = component_level_scores(gold, gold);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 1.0);
  EXPECT_DOUBLE_EQ(r.f1, 1.0);
}

TEST(ComponentScores, EmptyPredictionsScoreZero) {
  const Corpus gold{{"a", {battery_tuple()}}, {"b", {boston_gold()}}};
  const Corpus pred{{"a", {}}, {"b", {}}};
  const ScoreReport r = component_level_scores(gold, pred);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
  EXPECT_EQ(r.gold_count, 2u);
  EXPECT_EQ(r.predicted_count, 0u);
}

TEST(ComponentScores, SinglePairAtFiveSevenths) {
  const Corpus gold{{"boston", {boston_gold()}}};
  const Corpus pred{{"boston", {boston_nlprompt()}}};
  const ScoreReport r = component_level_scores(gold, pred);
  EXPECT_EQ(r.true_positive, Fraction(5, 7));
  EXPECT_NEAR(r.precision, 5.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.recall, 5.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.f1 * 100.0, 71.43, 0.005);
}

TEST(ComponentScores, PerSlotTalliesOverMatchedPairs) {
  const Corpus gold{{"boston", {boston_gold()}}};
  const Corpus pred{{"boston", {boston_nlprompt()}}};
  const ScoreReport r = component_level_scores(gold, pred);
  EXPECT_EQ(r.per_slot.at(Slot::TargetEntity), (SlotAgreement{1, 0, 0}));
  EXPECT_EQ(r.per_slot.at(Slot::AspectCategory), (SlotAgreement{1, 1, 0}));
  // Spurious aspect term predicted where gold has none.
  EXPECT_EQ(r.per_slot.at(Slot::AspectTerm), (SlotAgreement{0, 0, 1}));
  EXPECT_FALSE(r.per_slot.contains(Slot::Reason));
}

TEST(ComponentScores, MismatchedIdsAreErrors) {
  const Corpus gold{{"a", {battery_tuple()}}};
  EXPECT_THROW(component_level_scores(gold, Corpus{{"b", {}}}), ScoringError);
  EXPECT_THROW(component_level_scores(gold, Corpus{}), ScoringError);
  EXPECT_THROW(tuple_level_scores(gold, Corpus{{"a", {}}, {"c", {}}}), ScoringError);
}

TEST(TupleScores, IdenticalSetsScorePerfect) {
  const Corpus gold{{"a", {battery_tuple(), boston_gold()}}};
  const ScoreReport r = tuple_level_scores(gold, gold);
  EXPECT_DOUBLE_EQ(r.f1, 1.0);
}

TEST(TupleScores, NineOfTenSlotsIsNoHit) {
  OpinionTuple near = battery_tuple();
  near.set(Slot::Reason, "something else");
  const ScoreReport r = tuple_level_scores(Corpus{{"a", {battery_tuple()}}}, Corpus{{"a", {near}}});
  EXPECT_TRUE(r.true_positive.is_zero());
}

TEST(TupleScores, OneOfTwoHits) {
  const Corpus gold{{"a", {battery_tuple(), boston_gold()}}};
  const Corpus pred{{"a", {boston_gold(), boston_nlprompt()}}};
  const ScoreReport r = tuple_level_scores(gold, pred);
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.f1, 0.5);
}

TEST(TupleScores, DuplicatePredictionsConsumeGoldOnce) {
  const Corpus gold{{"a", {boston_gold()}}};
  const Corpus pred{{"a", {boston_gold(), boston_gold()}}};
  const ScoreReport r = tuple_level_scores(gold, pred);
  EXPECT_EQ(r.true_positive, Fraction::integer(1));
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
}

TEST(ScoreTask, UoceComponentIsUnprojected) {
  std::mt19937 rng(5);
  const Corpus gold = random_gold(rng, 20);
  const Corpus pred = random_predictions(gold, rng);
  // Random tuples can coincide inside a sentence; score_task dedupes them.
  bool has_dupes = false;
  for (const auto& [id, set] : gold) {
    auto sorted = set;
    std::sort(sorted.begin(), sorted.end());
    has_dupes |= std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }
  if (!has_dupes) {
    EXPECT_EQ(score_task(gold, pred, TaskKind::UOCE, Metric::Component),
              component_level_scores(gold, pred));
  }
}

TEST(ScoreTask, AsteIgnoresWrongTargetEntity) {
  OpinionTuple pred = battery_tuple();
  pred.set(Slot::TargetEntity, "phone");
  const Corpus gold{{"a", {battery_tuple()}}};
  const Corpus p{{"a", {pred}}};
  EXPECT_DOUBLE_EQ(score_task(gold, p, TaskKind::ASTE, Metric::Component).f1, 1.0);
  EXPECT_LT(score_task(gold, p, TaskKind::UOCE, Metric::Component).f1, 1.0);
  EXPECT_DOUBLE_EQ(score_task(gold, p, TaskKind::ASTE, Metric::Tuple).f1, 1.0);
  EXPECT_DOUBLE_EQ(score_task(gold, p, TaskKind::UOCE, Metric::Tuple).f1, 0.0);
}

TEST(ScoreTask, ProjectionDuplicatesCollapse) {
  OpinionTuple a = battery_tuple();
  OpinionTuple b = battery_tuple();
  b.set(Slot::HolderEntity, "other");
  const Corpus gold{{"a", {a, b}}};
  const ScoreReport r = score_task(gold, gold, TaskKind::ASTE, Metric::Component);
  EXPECT_EQ(r.gold_count, 1u);
}

TEST(ScoreTask, PartialCreditWithoutExactMatches) {
  const Corpus gold{{"boston", {boston_gold()}}, {"battery", {battery_tuple()}}};
  OpinionTuple near = battery_tuple();
  near.set(Slot::Qualifier, "heavy computations");
  const Corpus pred{{"boston", {boston_nlprompt()}}, {"battery", {near}}};
  EXPECT_EQ(score_task(gold, pred, TaskKind::UOCE, Metric::Tuple).f1, 0.0);
  EXPECT_GT(score_task(gold, pred, TaskKind::UOCE, Metric::Component).f1, 0.0);
}

TEST(ScoringProperty, ComponentDominatesTupleAndIsOrderFree) {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    const Corpus gold = random_gold(rng, 8);
    const Corpus pred = random_predictions(gold, rng);
    for (TaskKind task : {TaskKind::UOCE, TaskKind::ACOS, TaskKind::ASTE}) {
      const ScoreReport comp = score_task(gold, pred, task, Metric::Component);
      const ScoreReport tup = score_task(gold, pred, task, Metric::Tuple);
      EXPECT_GE(comp.precision, tup.precision);
      EXPECT_GE(comp.recall, tup.recall);
      EXPECT_GE(comp.f1, tup.f1);
      EXPECT_LE(comp.true_positive, Fraction::integer(static_cast<std::int64_t>(
                                        std::min(comp.gold_count, comp.predicted_count))));
    }

    Corpus shuffled = pred;
    for (auto& [id, set] : shuffled) std::shuffle(set.begin(), set.end(), rng);
    EXPECT_EQ(component_level_scores(gold, pred), component_level_scores(gold, shuffled));
    EXPECT_EQ(tuple_level_scores(gold, pred), tuple_level_scores(gold, shuffled));
  }
}

TEST(ScoringProperty, ShardsAreAdditive) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 50; ++iter) {
    const Corpus gold = random_gold(rng, 10);
    const Corpus pred = random_predictions(gold, rng);
    Corpus g1, g2, p1, p2;
    int k = 0;
    for (const auto& [id, set] : gold) {
      const bool first = (k++ % 2) == 0;
      (first ? g1 : g2).emplace(id, set);
      (first ? p1 : p2).emplace(id, pred.at(id));
    }
    for (Metric metric : {Metric::Component, Metric::Tuple}) {
      ScoreReport merged = score_task(g1, p1, TaskKind::UOCE, metric);
      merged += score_task(g2, p2, TaskKind::UOCE, metric);
      EXPECT_EQ(merged, score_task(gold, pred, TaskKind::UOCE, metric));
    }
  }
}
