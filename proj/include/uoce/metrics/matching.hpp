#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "uoce/metrics/fraction.hpp"

namespace uoce::metrics {

/// Pairwise agreement between gold tuples (rows) and predicted tuples
/// (columns). Every cell lies in [0, 1].
class AgreementMatrix {
 public:
  AgreementMatrix() = default;
  AgreementMatrix(std::size_t rows, std::size_t cols);
  /// Row-major cells; throws std::invalid_argument on size mismatch or a
  /// cell outside [0, 1].
  AgreementMatrix(std::size_t rows, std::size_t cols, std::vector<Fraction> cells);
  /// Convenience for literal matrices; see Fraction::from_double.
  static AgreementMatrix from_values(std::size_t rows, std::size_t cols,
                                     const std::vector<double>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Fraction& at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
  void set(std::size_t row, std::size_t col, Fraction value);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fraction> cells_;
};

/// One-to-one alignment. Pairs are sorted by (gold, predicted) and only
/// carry positive agreement; zero-weight pairs are never reported.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Fraction total;

  double total_weight() const { return total.to_double(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Maximum-weight bipartite matching (Hungarian algorithm on exact integer
/// weights). Among equal-weight optima the lexicographically smallest pair
/// sequence is returned.
Matching optimal_matching(const AgreementMatrix& matrix);

inline constexpr std::size_t kBruteForceLimit = 8;

/// Exhaustive enumeration with the same objective and tie-break as
/// optimal_matching. Throws std::invalid_argument when
/// min(rows, cols) > kBruteForceLimit.
Matching brute_force_matching(const AgreementMatrix& matrix);

}  // namespace uoce::metrics
