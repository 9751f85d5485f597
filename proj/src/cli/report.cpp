#include "uoce/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace uoce::cli {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", fraction * 100.0);
  return buf;
}

namespace {

std::string pad_right(const std::string& s, std::size_t w) {
  return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}
std::string pad_left(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

/// Display width, counting UTF-8 code points.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::size_t extra = row[i].size() - width(row[i]);
      if (i == 0) line += pad_right(row[i], widths[i] + extra);
      else line += "  " + pad_left(row[i], widths[i] + extra);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_quote(row[i]);
    out += "\n";
  }
  return out;
}

std::string fixed(double v, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::string render_score(const metrics::ScoreReport& r, bool as_csv) {
  std::vector<std::vector<std::string>> slots = {
      {"slot", "name", "gold", "agreed", "rate", "spurious"}};
  for (const auto& [slot, a] : r.per_slot) {
    slots.push_back({std::string(slot_key(slot)), std::string(slot_name(slot)),
                     std::to_string(a.gold_present), std::to_string(a.agreed), percent(a.rate()),
                     std::to_string(a.spurious)});
  }
  if (as_csv) {
    std::vector<std::vector<std::string>> rows = {
        {"precision", "recall", "f1", "tp", "gold", "predicted", "matched"},
        {percent(r.precision), percent(r.recall), percent(r.f1), fixed(r.true_positive_mass(), 4),
         std::to_string(r.gold_count), std::to_string(r.predicted_count),
         std::to_string(r.matched_pairs)}};
    return csv(rows) + "\n" + csv(slots);
  }
  std::string out = "P " + percent(r.precision) + " R " + percent(r.recall) + " F1 " + percent(r.f1) + "\n";
  out += "TP " + fixed(r.true_positive_mass(), 4) + " (" + r.true_positive.to_string() + ")  gold " +
         std::to_string(r.gold_count) + "  predicted " + std::to_string(r.predicted_count) +
         "  matched " + std::to_string(r.matched_pairs) + "\n";
  if (!r.per_slot.empty()) out += "\n" + table(slots);
  return out;
}

std::string render_stats(const io::DatasetStats& s, bool as_csv) {
  std::vector<std::vector<std::string>> rows = {{"slot", "name", "total", "unique"}};
  for (Slot slot : kAllSlots) {
    rows.push_back({std::string(slot_key(slot)), std::string(slot_name(slot)),
                    std::to_string(s[slot].total), std::to_string(s[slot].unique)});
  }
  if (as_csv) {
    return csv({{"sentences", "opinions"}, {std::to_string(s.sentences), std::to_string(s.opinions)}}) +
           "\n" + csv(rows);
  }
  return "sentences " + std::to_string(s.sentences) + "\nopinions  " + std::to_string(s.opinions) +
         "\n\n" + table(rows);
}

std::optional<MeanSd> mean_sd(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return MeanSd{mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

std::string render_sweep(const SweepReport& r, bool as_csv) {
  const std::size_t nr = r.rows.size(), nc = r.columns.size();
  auto collect_row = [&](std::size_t i) {
    std::vector<double> v;
    for (std::size_t j = 0; j < nc; ++j) {
      if (r.cells[i][j].f1) v.push_back(*r.cells[i][j].f1 * 100.0);
    }
    return v;
  };
  auto collect_col = [&](std::size_t j) {
    std::vector<double> v;
    for (std::size_t i = 0; i < nr; ++i) {
      if (r.cells[i][j].f1) v.push_back(*r.cells[i][j].f1 * 100.0);
    }
    return v;
  };
  auto show = [](const std::optional<MeanSd>& m, bool sd) {
    if (!m) return std::string("-");
    return fixed(sd ? m->sd : m->mean, 2);
  };

  const std::string mu = as_csv ? "mean" : "μ";
  const std::string sigma = as_csv ? "sd" : "σ";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"model"};
  for (const std::string& c : r.columns) header.push_back(c);
  header.push_back(mu);
  header.push_back(sigma);
  rows.push_back(header);

  std::vector<std::string> notes;
  for (std::size_t i = 0; i < nr; ++i) {
    std::vector<std::string> row = {r.rows[i]};
    for (std::size_t j = 0; j < nc; ++j) {
      const SweepCell& c = r.cells[i][j];
      std::string text = c.f1 ? percent(*c.f1) : "failed";
      if (!c.note.empty()) {
        text += "*";
        notes.push_back(r.rows[i] + " / " + r.columns[j] + ": " + c.note);
      }
      row.push_back(text);
    }
    const auto stats = mean_sd(collect_row(i));
    row.push_back(show(stats, false));
    row.push_back(show(stats, true));
    rows.push_back(row);
  }
  std::vector<std::string> mean_row = {mu}, sd_row = {sigma};
  for (std::size_t j = 0; j < nc; ++j) {
    const auto stats = mean_sd(collect_col(j));
    mean_row.push_back(show(stats, false));
    sd_row.push_back(show(stats, true));
  }
  rows.push_back(mean_row);
  rows.push_back(sd_row);

  std::string out = as_csv ? csv(rows) : table(rows);
  if (!notes.empty()) {
    out += "\n";
    for (const std::string& n : notes) out += "* " + n + "\n";
  }
  return out;
}

}  // namespace uoce::cli
