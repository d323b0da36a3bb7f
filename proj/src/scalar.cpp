#include "hurwitz/errors.hpp"
#include "hurwitz/scalar.hpp"

namespace hurwitz {
namespace {

[[noreturn]] void mode_mismatch() {
  throw ModeError("rational-mode and series-mode scalars cannot be mixed");
}

}  // namespace

const Rational& Scalar::rational() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw ModeError("scalar is in series mode");
}

const Series& Scalar::series() const {
  if (auto* s = std::get_if<Series>(&value_)) return *s;
  throw ModeError("scalar is in rational mode");
}

bool Scalar::is_zero() const {
  return is_series() ? series().is_zero() : rational() == 0;
}

std::string Scalar::to_string() const {
  return is_series() ? series().to_string() : format_rational(rational());
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (is_series() != other.is_series()) mode_mismatch();
  if (is_series())
    std::get<Series>(value_) += other.series();
  else
    std::get<Rational>(value_) += other.rational();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (is_series() != other.is_series()) mode_mismatch();
  if (is_series())
    std::get<Series>(value_) -= other.series();
  else
    std::get<Rational>(value_) -= other.rational();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_series() != other.is_series()) mode_mismatch();
  if (is_series())
    std::get<Series>(value_) *= other.series();
  else
    std::get<Rational>(value_) *= other.rational();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar& Scalar::operator*=(const Rational& c) {
  if (is_series())
    std::get<Series>(value_) *= c;
  else
    std::get<Rational>(value_) *= c;
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_series()) return Scalar(-series());
  return Scalar(Rational(-rational()));
}

Scalar Scalar::inverse() const {
  if (is_series()) return Scalar(series().inverse());
  if (rational() == 0) throw PoleError("division by zero");
  return Scalar(Rational(1 / rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_series() != b.is_series()) mode_mismatch();
  if (a.is_series()) return a.series() == b.series();
  return a.rational() == b.rational();
}

Scalar constant_like(const Rational& c, const Scalar& like) {
  if (like.is_series()) return Scalar(Series::constant(c, like.series().order()));
  return Scalar(c);
}

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar out = one_like(base);
  Scalar square = base;
  while (exponent > 0) {
    if (exponent & 1) out *= square;
    exponent >>= 1;
    if (exponent) square *= square;
  }
  return out;
}

}  // namespace hurwitz
