#pragma once

/**
 * @file semifield.hpp
 * @brief The two idempotent semifields used throughout the library.
 *
 *   max-times:  (R+ u {0}, max, *, 0, 1)
 *   max-plus:   (R u {-inf}, max, +, -inf, 0)
 *
 * In both cases addition is max and the induced order is the natural order on
 * the reals. The natural logarithm maps max-times onto max-plus exactly, which
 * is how several algorithms below work internally.
 */

#include <cmath>
#include <limits>
#include <string_view>
#include <utility>

#include "tropirank/error.hpp"

namespace tropirank {

enum class Scale { multiplicative, additive };

std::string_view to_string(Scale scale) noexcept;

/// Parses "multiplicative"/"mult"/"additive"/"add". Throws UsageError.
Scale parse_scale(std::string_view name);

/// Default relative tolerance for every "equal"/"coincide" comparison.
inline constexpr double kDefaultTolerance = 1e-9;

/// |a - b| <= tol * max(1, |a|, |b|); two zero elements of max-plus compare equal.
bool approx_equal(double a, double b, double tol = kDefaultTolerance) noexcept;

namespace semiring {

// Value-level policies. They operate on raw doubles and assume the values are
// already valid members of the carrier set.

struct MaxTimes {
  static constexpr Scale scale = Scale::multiplicative;
  static constexpr double zero() noexcept { return 0.0; }
  static constexpr double one() noexcept { return 1.0; }
  static double add(double a, double b) noexcept { return a < b ? b : a; }
  static double mul(double a, double b) noexcept { return a * b; }
  static double inv(double a) noexcept { return 1.0 / a; }
  static double pow(double a, double p) noexcept { return std::pow(a, p); }
  static double to_log(double a) noexcept { return std::log(a); }
  static double from_log(double a) noexcept { return std::exp(a); }
};

struct MaxPlus {
  static constexpr Scale scale = Scale::additive;
  static constexpr double zero() noexcept { return -std::numeric_limits<double>::infinity(); }
  static constexpr double one() noexcept { return 0.0; }
  static double add(double a, double b) noexcept { return a < b ? b : a; }
  // -inf + finite stays -inf under IEEE arithmetic; +inf never enters the carrier.
  static double mul(double a, double b) noexcept { return a + b; }
  static double inv(double a) noexcept { return -a; }
  static double pow(double a, double p) noexcept { return p * a; }
  static double to_log(double a) noexcept { return a; }
  static double from_log(double a) noexcept { return a; }
};

/// Calls f with the policy object matching the runtime scale.
template <class F>
decltype(auto) visit(Scale scale, F&& f) {
  if (scale == Scale::multiplicative) return std::forward<F>(f)(MaxTimes{});
  return std::forward<F>(f)(MaxPlus{});
}

}  // namespace semiring

double zero_value(Scale scale) noexcept;
double one_value(Scale scale) noexcept;

/// True when value is a member of the carrier set of the scale.
bool is_valid_value(double value, Scale scale) noexcept;

/// One element of a semifield, tagged with the semifield it belongs to.
class Scalar {
 public:
  /// Throws UsageError when value is outside the carrier set (negative or NaN
  /// for max-times, NaN or +inf for max-plus).
  Scalar(double value, Scale scale);

  static Scalar zero(Scale scale) noexcept;
  static Scalar one(Scale scale) noexcept;

  double value() const noexcept { return value_; }
  Scale scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return value_ == zero_value(scale_); }

  /// Image in max-plus under the logarithm (identity for max-plus scalars).
  Scalar to_additive() const noexcept;
  /// Image in max-times under the exponential (identity for max-times scalars).
  Scalar to_multiplicative() const noexcept;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  struct Unchecked {};
  Scalar(double value, Scale scale, Unchecked) noexcept : value_(value), scale_(scale) {}

  double value_;
  Scale scale_;

  friend Scalar oplus(const Scalar&, const Scalar&);
  friend Scalar otimes(const Scalar&, const Scalar&);
  friend Scalar inv(const Scalar&);
  friend Scalar rpow(const Scalar&, double);
};

Scalar oplus(const Scalar& a, const Scalar& b);
Scalar otimes(const Scalar& a, const Scalar& b);
/// Throws DomainError for the zero element.
Scalar inv(const Scalar& a);
/// Rational (real) power in the semifield sense. Throws DomainError for a zero
/// base with a negative exponent.
Scalar rpow(const Scalar& a, double p);
/// a <= b  iff  a (+) b == b.
bool leq(const Scalar& a, const Scalar& b);

bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

}  // namespace tropirank
