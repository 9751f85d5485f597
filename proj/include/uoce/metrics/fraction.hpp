#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace uoce::metrics {

/// Exact nonnegative rational. Agreement values are ratios of small slot
/// counts, so exact sums keep matching ties and corpus totals free of
/// rounding drift. Arithmetic throws std::overflow_error rather than wrap.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den);
  static Fraction integer(std::int64_t n) { return Fraction(n, 1); }

  /// Accepts values that lie on the 1/2520 grid (2520 = lcm(1..10), which
  /// covers every k/n agreement of a ten-slot tuple) within 1e-9.
  /// Throws std::invalid_argument for anything else.
  static Fraction from_double(double value);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  Fraction& operator+=(const Fraction& rhs);
  friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
  Fraction& operator-=(const Fraction& rhs);
  friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace uoce::metrics
