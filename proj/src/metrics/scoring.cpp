#include "uoce/metrics/scoring.hpp"

#include <algorithm>

namespace uoce::metrics {

std::string_view to_string(Metric m) { return m == Metric::Component ? "component" : "tuple"; }

std::optional<Metric> parse_metric(std::string_view text) {
  if (text == "component") return Metric::Component;
  if (text == "tuple") return Metric::Tuple;
  return std::nullopt;
}

Fraction agreement_fraction(const OpinionTuple& pred, const OpinionTuple& gold) {
  const std::size_t present = gold.present_count();
  if (present == 0) return Fraction::integer(pred.present_count() == 0 ? 1 : 0);
  std::int64_t shared = 0;
  for (Slot s : kAllSlots) {
    if (gold.has(s) && gold.get(s) == pred.get(s)) ++shared;
  }
  return Fraction(shared, static_cast<std::int64_t>(present));
}

AgreementMatrix build_agreement_matrix(const std::vector<OpinionTuple>& gold,
                                       const std::vector<OpinionTuple>& pred) {
  AgreementMatrix m(gold.size(), pred.size());
  for (std::size_t i = 0; i < gold.size(); ++i)
    for (std::size_t j = 0; j < pred.size(); ++j) m.set(i, j, agreement_fraction(pred[j], gold[i]));
  return m;
}

Matching sentence_matching(const std::vector<OpinionTuple>& gold,
                           const std::vector<OpinionTuple>& pred) {
  return optimal_matching(build_agreement_matrix(gold, pred));
}

void ScoreReport::finalize() {
  const double tp = true_positive.to_double();
  precision = predicted_count ? tp / static_cast<double>(predicted_count) : 0.0;
  recall = gold_count ? tp / static_cast<double>(gold_count) : 0.0;
  f1 = (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

ScoreReport& ScoreReport::operator+=(const ScoreReport& rhs) {
  true_positive += rhs.true_positive;
  gold_count += rhs.gold_count;
  predicted_count += rhs.predicted_count;
  matched_pairs += rhs.matched_pairs;
  for (const auto& [slot, tally] : rhs.per_slot) {
    SlotAgreement& mine = per_slot[slot];
    mine.gold_present += tally.gold_present;
    mine.agreed += tally.agreed;
    mine.spurious += tally.spurious;
  }
  finalize();
  return *this;
}

namespace {

void check_ids(const Corpus& gold, const Corpus& pred) {
  auto g = gold.begin();
  auto p = pred.begin();
  while (g != gold.end() || p != pred.end()) {
    if (p == pred.end() || (g != gold.end() && g->first < p->first)) {
      throw ScoringError("sentence '" + g->first + "' has gold opinions but no prediction entry");
    }
    if (g == gold.end() || p->first < g->first) {
      throw ScoringError("sentence '" + p->first + "' has predictions but is not in the gold set");
    }
    ++g;
    ++p;
  }
}

void tally_pair(ScoreReport& report, const OpinionTuple& gold, const OpinionTuple& pred) {
  for (Slot s : kAllSlots) {
    if (gold.has(s)) {
      SlotAgreement& t = report.per_slot[s];
      ++t.gold_present;
      if (gold.get(s) == pred.get(s)) ++t.agreed;
    } else if (pred.has(s)) {
      ++report.per_slot[s].spurious;
    }
  }
}

std::vector<OpinionTuple> project_unique(const std::vector<OpinionTuple>& tuples, TaskKind task) {
  std::vector<OpinionTuple> out;
  out.reserve(tuples.size());
  for (const OpinionTuple& t : tuples) {
    OpinionTuple p = project_tuple(t, task);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ScoreReport component_level_scores(const Corpus& gold, const Corpus& pred) {
  check_ids(gold, pred);
  ScoreReport report;
  for (const auto& [id, gold_set] : gold) {
    // Canonical prediction order: ties then resolve the same way however the
    // predictions were listed, so per-slot tallies are order independent.
    std::vector<OpinionTuple> pred_set = pred.at(id);
    std::sort(pred_set.begin(), pred_set.end());
    const Matching m = sentence_matching(gold_set, pred_set);
    report.true_positive += m.total;
    report.gold_count += gold_set.size();
    report.predicted_count += pred_set.size();
    report.matched_pairs += m.pairs.size();
    for (const auto& [gi, pi] : m.pairs) tally_pair(report, gold_set[gi], pred_set[pi]);
  }
  report.finalize();
  return report;
}

ScoreReport tuple_level_scores(const Corpus& gold, const Corpus& pred) {
  check_ids(gold, pred);
  ScoreReport report;
  for (const auto& [id, gold_set] : gold) {
    const std::vector<OpinionTuple>& pred_set = pred.at(id);
    std::vector<bool> consumed(gold_set.size(), false);
    std::int64_t hits = 0;
    for (const OpinionTuple& p : pred_set) {
      for (std::size_t g = 0; g < gold_set.size(); ++g) {
        if (!consumed[g] && gold_set[g] == p) {
          consumed[g] = true;
          ++hits;
          tally_pair(report, gold_set[g], p);
          break;
        }
      }
    }
    report.true_positive += Fraction::integer(hits);
    report.gold_count += gold_set.size();
    report.predicted_count += pred_set.size();
    report.matched_pairs += static_cast<std::size_t>(hits);
  }
  report.finalize();
  return report;
}

ScoreReport score_task(const Corpus& gold, const Corpus& pred, TaskKind task, Metric metric) {
  Corpus g;
  Corpus p;
  for (const auto& [id, tuples] : gold) g.emplace(id, project_unique(tuples, task));
  for (const auto& [id, tuples] : pred) p.emplace(id, project_unique(tuples, task));
  return metric == Metric::Component ? component_level_scores(g, p) : tuple_level_scores(g, p);
}

}  // namespace uoce::metrics
