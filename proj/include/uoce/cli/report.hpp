#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uoce/io/stats.hpp"
#include "uoce/metrics/scoring.hpp"

namespace uoce::cli {

/// Percentage with two decimals, e.g. 71.43.
std::string percent(double fraction);

/// "P 71.43 R 71.43 F1 71.43" followed by counts and the per-slot table.
std::string render_score(const metrics::ScoreReport& r, bool csv);

std::string render_stats(const io::DatasetStats& s, bool csv);

struct SweepCell {
  std::optional<double> f1;  // fraction in [0,1]; nullopt when the run failed
  std::string note;          // non-empty marks the cell with a footnote
};

struct SweepReport {
  std::vector<std::string> rows;     // model labels
  std::vector<std::string> columns;  // variant names
  std::vector<std::vector<SweepCell>> cells;
};

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
};

/// nullopt for an empty sample.
std::optional<MeanSd> mean_sd(std::span<const double> values);

/// Grid of F1 percentages with μ and σ per row and per column, computed
/// over the cells that have a value. Failed cells print as "failed"; noted
/// cells carry a '*' and a footnote.
std::string render_sweep(const SweepReport& r, bool csv);

}  // namespace uoce::cli
