#include "uoce/metrics/fraction.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uoce::metrics {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("fraction overflow");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("fraction overflow");
  return out;
}

constexpr std::int64_t kGrid = 2520;

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Fraction Fraction::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("agreement value is not finite");
  const double scaled = value * static_cast<double>(kGrid);
  const double rounded = std::round(scaled);
  if (std::fabs(scaled - rounded) > 1e-9 * static_cast<double>(kGrid)) {
    throw std::invalid_argument("agreement value " + std::to_string(value) +
                                " is not a multiple of 1/2520");
  }
  return Fraction(static_cast<std::int64_t>(rounded), kGrid);
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  const std::int64_t l = std::lcm(den_, rhs.den_);
  *this = Fraction(add(mul(num_, l / den_), mul(rhs.num_, l / rhs.den_)), l);
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
  return *this += Fraction(-rhs.num_, rhs.den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
}

}  // namespace uoce::metrics
