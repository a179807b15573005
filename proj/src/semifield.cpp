#include "tropirank/semifield.hpp"

#include <algorithm>
#include <string>

namespace tropirank {

std::string_view to_string(Scale scale) noexcept {
  return scale == Scale::multiplicative ? "multiplicative" : "additive";
}

Scale parse_scale(std::string_view name) {
  if (name == "multiplicative" || name == "mult") return Scale::multiplicative;
  if (name == "additive" || name == "add") return Scale::additive;
  throw UsageError("unknown scale '" + std::string(name) + "'");
}

bool approx_equal(double a, double b, double tol) noexcept {
  if (a == b) return true;  // also covers -inf == -inf
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  const double mag = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * mag;
}

double zero_value(Scale scale) noexcept {
  return semiring::visit(scale, [](auto sf) { return sf.zero(); });
}

double one_value(Scale scale) noexcept {
  return semiring::visit(scale, [](auto sf) { return sf.one(); });
}

bool is_valid_value(double value, Scale scale) noexcept {
  if (std::isnan(value)) return false;
  if (scale == Scale::multiplicative) return value >= 0.0 && std::isfinite(value);
  return value < std::numeric_limits<double>::infinity();
}

namespace {

void require_same_scale(const Scalar& a, const Scalar& b, const char* op) {
  if (a.scale() != b.scale()) {
    throw UsageError(std::string(op) + ": scale mismatch (" + std::string(to_string(a.scale())) +
                     " vs " + std::string(to_string(b.scale())) + ")");
  }
}

}  // namespace

Scalar::Scalar(double value, Scale scale) : value_(value), scale_(scale) {
  if (!is_valid_value(value, scale)) {
    throw UsageError("value " + std::to_string(value) + " is not an element of the " +
                     std::string(to_string(scale)) + " semifield");
  }
}

Scalar Scalar::zero(Scale scale) noexcept { return {zero_value(scale), scale, Unchecked{}}; }
Scalar Scalar::one(Scale scale) noexcept { return {one_value(scale), scale, Unchecked{}}; }

Scalar Scalar::to_additive() const noexcept {
  if (scale_ == Scale::additive) return *this;
  return {std::log(value_), Scale::additive, Unchecked{}};
}

Scalar Scalar::to_multiplicative() const noexcept {
  if (scale_ == Scale::multiplicative) return *this;
  return {std::exp(value_), Scale::multiplicative, Unchecked{}};
}

Scalar oplus(const Scalar& a, const Scalar& b) {
  require_same_scale(a, b, "oplus");
  return {std::max(a.value_, b.value_), a.scale_, Scalar::Unchecked{}};
}

Scalar otimes(const Scalar& a, const Scalar& b) {
  require_same_scale(a, b, "otimes");
  const double v = semiring::visit(a.scale_, [&](auto sf) { return sf.mul(a.value_, b.value_); });
  return {v, a.scale_, Scalar::Unchecked{}};
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DomainError("no inverse for zero");
  const double v = semiring::visit(a.scale_, [&](auto sf) { return sf.inv(a.value_); });
  return {v, a.scale_, Scalar::Unchecked{}};
}

Scalar rpow(const Scalar& a, double p) {
  if (p == 0.0) return Scalar::one(a.scale_);
  if (a.is_zero()) {
    if (p < 0.0) throw DomainError("zero raised to a negative power");
    return a;
  }
  const double v = semiring::visit(a.scale_, [&](auto sf) { return sf.pow(a.value_, p); });
  return {v, a.scale_, Scalar::Unchecked{}};
}

bool leq(const Scalar& a, const Scalar& b) { return oplus(a, b) == b; }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  require_same_scale(a, b, "approx_equal");
  return approx_equal(a.value(), b.value(), tol);
}

}  // namespace tropirank
