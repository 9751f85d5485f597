#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/core/opinion.hpp"
#include "uoce/metrics/fraction.hpp"
#include "uoce/metrics/matching.hpp"

namespace uoce::metrics {

/// Opinion sets keyed by sentence id.
using Corpus = std::map<std::string, std::vector<OpinionTuple>>;

class ScoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Metric { Component, Tuple };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view text);

/// Share of gold's present (slot, value) pairs reproduced by @p pred.
/// A gold tuple with no present slots agrees (1) only with an equally empty
/// prediction. Slots present only in the prediction cost nothing here.
Fraction agreement_fraction(const OpinionTuple& pred, const OpinionTuple& gold);
inline double agreement(const OpinionTuple& pred, const OpinionTuple& gold) {
  return agreement_fraction(pred, gold).to_double();
}

/// Rows are gold tuples, columns predictions.
AgreementMatrix build_agreement_matrix(const std::vector<OpinionTuple>& gold,
                                       const std::vector<OpinionTuple>& pred);

/// Per-slot view over matched pairs.
struct SlotAgreement {
  std::size_t gold_present = 0;  // matched pairs whose gold has the slot
  std::size_t agreed = 0;        // ...and the prediction reproduces it
  std::size_t spurious = 0;      // matched pairs where only the prediction has it

  double rate() const {
    return gold_present ? static_cast<double>(agreed) / static_cast<double>(gold_present) : 0.0;
  }
  friend bool operator==(const SlotAgreement&, const SlotAgreement&) = default;
};

struct ScoreReport {
  Fraction true_positive;
  std::size_t gold_count = 0;
  std::size_t predicted_count = 0;
  std::size_t matched_pairs = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::map<Slot, SlotAgreement> per_slot;

  double true_positive_mass() const { return true_positive.to_double(); }

  /// Recomputes precision, recall and F1 from the counts (0 for 0/0).
  void finalize();
  /// Adds counts and per-slot tallies, then finalizes.
  ScoreReport& operator+=(const ScoreReport& rhs);

  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

/// Component-level exact match: per sentence, the optimal matching of the
/// agreement matrix contributes its total weight to TP.
ScoreReport component_level_scores(const Corpus& gold, const Corpus& pred);

/// Tuple-level exact match: a prediction is a hit when it equals a not yet
/// consumed gold tuple of the same sentence on all ten slots.
ScoreReport tuple_level_scores(const Corpus& gold, const Corpus& pred);

/// Projects both sides onto the task's slots, drops duplicates created by
/// the projection within each sentence, then applies @p metric.
ScoreReport score_task(const Corpus& gold, const Corpus& pred, TaskKind task, Metric metric);

/// Restriction to one sentence, exposed for per-sentence inspection.
Matching sentence_matching(const std::vector<OpinionTuple>& gold,
                           const std::vector<OpinionTuple>& pred);

}  // namespace uoce::metrics
