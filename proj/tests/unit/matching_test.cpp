#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "uoce/metrics/matching.hpp"

using namespace uoce::metrics;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

namespace {

// Weight-only oracle: pad to a square and walk every permutation.
Fraction permutation_optimum(const AgreementMatrix& m) {
  const std::size_t n = std::max(m.rows(), m.cols());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Fraction best;
  do {
    Fraction total;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (perm[i] < m.cols()) total += m.at(i, perm[i]);
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

AgreementMatrix random_matrix(std::mt19937& rng, std::size_t max_side, int denominator) {
  const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, max_side)(rng);
  const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, max_side)(rng);
  std::vector<Fraction> cells;
  for (std::size_t k = 0; k < rows * cols; ++k)
    cells.emplace_back(std::uniform_int_distribution<int>(0, denominator)(rng), denominator);
  return AgreementMatrix(rows, cols, std::move(cells));
}

void expect_valid(const Matching& m, const AgreementMatrix& a) {
  std::vector<bool> rows(a.rows()), cols(a.cols());
  Fraction total;
  for (const auto& [i, j] : m.pairs) {
    ASSERT_LT(i, a.rows());
    ASSERT_LT(j, a.cols());
    EXPECT_FALSE(rows[i]);
    EXPECT_FALSE(cols[j]);
    rows[i] = cols[j] = true;
    EXPECT_FALSE(a.at(i, j).is_zero());
    total += a.at(i, j);
  }
  EXPECT_TRUE(std::is_sorted(m.pairs.begin(), m.pairs.end()));
  EXPECT_LE(m.pairs.size(), std::min(a.rows(), a.cols()));
  EXPECT_EQ(m.total, total);
}

}  // namespace

TEST(OptimalMatching, SingleCell) {
  const auto m = AgreementMatrix::from_values(1, 1, {1.0});
  const Matching r = optimal_matching(m);
  EXPECT_EQ(r.pairs, (Pairs{{0, 0}}));
  EXPECT_DOUBLE_EQ(r.total_weight(), 1.0);
}

TEST(OptimalMatching, AntiDiagonalWinsTwoByTwo) {
  // 0.9 + 0.8 = 1.7 beats the diagonal 0.6 + 0.7 = 1.3.
  const auto m = AgreementMatrix::from_values(2, 2, {0.6, 0.9, 0.8, 0.7});
  const Matching r = optimal_matching(m);
  EXPECT_EQ(r.pairs, (Pairs{{0, 1}, {1, 0}}));
  EXPECT_EQ(r.total, Fraction(17, 10));
  EXPECT_EQ(brute_force_matching(m), r);
}

TEST(OptimalMatching, RectangularLeavesOnePredictionUnmatched) {
  // Six injective assignments; best is (0,2)+(1,1) = 0.5 + 0.4 = 0.9.
  const auto m = AgreementMatrix::from_values(2, 3, {0.2, 0.0, 0.5, 0.0, 0.4, 0.6});
  const Matching r = optimal_matching(m);
  EXPECT_EQ(r.pairs, (Pairs{{0, 2}, {1, 1}}));
  EXPECT_EQ(r.total, Fraction(9, 10));
  EXPECT_EQ(brute_force_matching(m), r);
}

TEST(OptimalMatching, EmptyMatrices) {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {4, 0}}) {
    const AgreementMatrix m(r, c);
    EXPECT_TRUE(optimal_matching(m).pairs.empty());
    EXPECT_TRUE(brute_force_matching(m).pairs.empty());
    EXPECT_TRUE(optimal_matching(m).total.is_zero());
  }
}

TEST(OptimalMatching, IdentityMatrixMatchesDiagonal) {
  const auto m = AgreementMatrix::from_values(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const Pairs diag{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(optimal_matching(m).pairs, diag);
  EXPECT_EQ(brute_force_matching(m).pairs, diag);
  EXPECT_EQ(brute_force_matching(m).total, Fraction::integer(3));
}

TEST(OptimalMatching, ZeroWeightPairsAreOmitted) {
  const auto m = AgreementMatrix::from_values(2, 2, {0.5, 0.0, 0.0, 0.0});
  EXPECT_EQ(optimal_matching(m).pairs, (Pairs{{0, 0}}));
}

TEST(OptimalMatching, TiesResolveToLexicographicallySmallest) {
  // Every full assignment totals 1; the diagonal is smallest.
  const auto uniform = AgreementMatrix::from_values(2, 2, {0.5, 0.5, 0.5, 0.5});
  EXPECT_EQ(optimal_matching(uniform).pairs, (Pairs{{0, 0}, {1, 1}}));

  // {(0,0)} and {(0,1),(1,0)} both weigh 1; (0,0) < (0,1).
  const auto mixed = AgreementMatrix::from_values(2, 2, {1.0, 0.5, 0.5, 0.0});
  EXPECT_EQ(optimal_matching(mixed).pairs, (Pairs{{0, 0}}));
  EXPECT_EQ(brute_force_matching(mixed).pairs, (Pairs{{0, 0}}));
}

TEST(BruteForceMatching, RejectsOversizedMatrices) {
  EXPECT_THROW(brute_force_matching(AgreementMatrix(9, 9)), std::invalid_argument);
  EXPECT_NO_THROW(brute_force_matching(AgreementMatrix(8, 2)));
}

TEST(AgreementMatrix, RejectsCellsOutsideUnitInterval) {
  EXPECT_THROW(AgreementMatrix::from_values(1, 1, {1.5}), std::invalid_argument);
  EXPECT_THROW(AgreementMatrix::from_values(1, 2, {0.5}), std::invalid_argument);
  EXPECT_THROW(AgreementMatrix::from_values(1, 1, {0.123456789}), std::invalid_argument);
}

TEST(MatchingProperty, HungarianEqualsBothOraclesOnRandomMatrices) {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 2000; ++iter) {
    const AgreementMatrix m = random_matrix(rng, 6, 7);
    const Matching fast = optimal_matching(m);
    const Matching slow = brute_force_matching(m);
    expect_valid(fast, m);
    expect_valid(slow, m);
    ASSERT_EQ(fast.total, slow.total) << "iteration " << iter;
    ASSERT_EQ(fast.pairs, slow.pairs) << "iteration " << iter;
    if (m.rows() <= 6 && m.cols() <= 6) {
      ASSERT_EQ(fast.total, permutation_optimum(m));
    }
  }
}

TEST(MatchingProperty, MixedDenominatorsStayExact) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    const int den = std::uniform_int_distribution<int>(1, 10)(rng);
    const AgreementMatrix m = random_matrix(rng, 5, den);
    EXPECT_EQ(optimal_matching(m), brute_force_matching(m));
  }
}

TEST(Fraction, ArithmeticIsExact) {
  Fraction sum;
  for (int k = 0; k < 7; ++k) sum += Fraction(1, 7);
  EXPECT_EQ(sum, Fraction::integer(1));
  EXPECT_EQ(Fraction(2, 4), Fraction(1, 2));
  EXPECT_LT(Fraction(5, 7), Fraction(6, 7));
  EXPECT_EQ(Fraction::from_double(5.0 / 7.0), Fraction(5, 7));
  EXPECT_EQ((Fraction(3, 4) - Fraction(1, 4)), Fraction(1, 2));
}
