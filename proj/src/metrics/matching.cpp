#include "uoce/metrics/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace uoce::metrics {

AgreementMatrix::AgreementMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

AgreementMatrix::AgreementMatrix(std::size_t rows, std::size_t cols, std::vector<Fraction> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows * cols) throw std::invalid_argument("agreement matrix size mismatch");
  for (const Fraction& f : cells_) {
    if (f < Fraction() || f > Fraction::integer(1))
      throw std::invalid_argument("agreement cell " + f.to_string() + " outside [0, 1]");
  }
}

AgreementMatrix AgreementMatrix::from_values(std::size_t rows, std::size_t cols,
                                             const std::vector<double>& values) {
  std::vector<Fraction> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(Fraction::from_double(v));
  return AgreementMatrix(rows, cols, std::move(cells));
}

void AgreementMatrix::set(std::size_t row, std::size_t col, Fraction value) {
  if (value < Fraction() || value > Fraction::integer(1))
    throw std::invalid_argument("agreement cell " + value.to_string() + " outside [0, 1]");
  cells_[row * cols_ + col] = value;
}

namespace {

// Weights scaled to a shared denominator so the solver works on integers.
class IntegerWeights {
 public:
  explicit IntegerWeights(const AgreementMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) den = std::lcm(den, m.at(i, j).den());
    weights_.resize(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Fraction& f = m.at(i, j);
        weights_[i * cols_ + j] = f.num() * (den / f.den());
      }
    den_ = den;
  }

  std::int64_t at(std::size_t i, std::size_t j) const { return weights_[i * cols_ + j]; }
  std::int64_t denominator() const { return den_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> weights_;
};

// Maximum total weight over the submatrix selected by @p rows x @p cols.
// Shortest-augmenting-path Hungarian method on a zero-padded square matrix.
std::int64_t max_assignment_weight(const IntegerWeights& w, const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols) {
  const std::size_t n = std::max(rows.size(), cols.size());
  if (rows.empty() || cols.empty()) return 0;

  auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
    if (i >= rows.size() || j >= cols.size()) return 0;
    return -w.at(rows[i], cols[j]);
  };

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::int64_t total = 0;
  for (std::size_t j = 1; j <= n; ++j) total -= cost(p[j] - 1, j - 1);
  return total;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

Fraction sum_pairs(const AgreementMatrix& m,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Fraction total;
  for (const auto& [i, j] : pairs) total += m.at(i, j);
  return total;
}

}  // namespace

Matching optimal_matching(const AgreementMatrix& matrix) {
  Matching out;
  if (matrix.rows() == 0 || matrix.cols() == 0) return out;

  const IntegerWeights w(matrix);
  std::vector<std::size_t> rows = iota_vec(matrix.rows());
  std::vector<std::size_t> cols = iota_vec(matrix.cols());
  const std::int64_t optimum = max_assignment_weight(w, rows, cols);

  // Fix gold rows in order, giving each the smallest predicted column that
  // still admits an optimal completion. Leaving a row unmatched is the last
  // resort: any optimum that skips a row it could match must pair a later
  // row, which compares greater.
  std::int64_t fixed = 0;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    rows.erase(rows.begin());
    for (auto it = cols.begin(); it != cols.end(); ++it) {
      const std::size_t j = *it;
      const std::int64_t wij = w.at(i, j);
      if (wij <= 0) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + (it - cols.begin()));
      if (fixed + wij + max_assignment_weight(w, rows, rest) == optimum) {
        out.pairs.emplace_back(i, j);
        fixed += wij;
        cols = std::move(rest);
        break;
      }
    }
  }
  out.total = sum_pairs(matrix, out.pairs);
  return out;
}

Matching brute_force_matching(const AgreementMatrix& matrix) {
  if (std::min(matrix.rows(), matrix.cols()) > kBruteForceLimit) {
    throw std::invalid_argument("brute-force matching limited to min(rows, cols) <= " +
                                std::to_string(kBruteForceLimit));
  }

  Matching best;
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<bool> col_used(matrix.cols(), false);

  auto consider = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> pairs = current;
    std::sort(pairs.begin(), pairs.end());
    const Fraction total = sum_pairs(matrix, pairs);
    if (total > best.total || (total == best.total && pairs < best.pairs)) {
      best.pairs = std::move(pairs);
      best.total = total;
    }
  };

  // Each row either stays unmatched or takes an unused column with positive
  // agreement; every leaf of the recursion is one candidate matching.
  auto recurse = [&](auto&& self, std::size_t row) -> void {
    if (row == matrix.rows()) {
      consider();
      return;
    }
    self(self, row + 1);
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (col_used[j] || matrix.at(row, j).is_zero()) continue;
      col_used[j] = true;
      current.emplace_back(row, j);
      self(self, row + 1);
      current.pop_back();
      col_used[j] = false;
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace uoce::metrics
