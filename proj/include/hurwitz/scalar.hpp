#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

using Rational = mpq_class;

// Accepts "a/b" or "a"; the result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);

// num/den in canonical form.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Always "num/den", including integers ("3/1", "0/1").
std::string format_rational(const Rational& r);

// Truncated formal power series in named variables with rational
// coefficients. All monomials of total degree above order() are discarded.
class Series {
 public:
  using Exponents = std::vector<int>;

  Series() = default;
  static Series constant(const Rational& c, int order);
  static Series variable(const std::string& name, int order);

  int order() const { return order_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational constant_term() const;
  // Coefficient of prod name^e over the given (name, exponent) pairs.
  Rational coefficient(const std::map<std::string, int>& monomial) const;
  bool is_zero() const { return terms_.empty(); }
  // Largest total degree with a nonzero coefficient, -1 for zero.
  int degree() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series& operator*=(const Rational& c);
  Series operator-() const;
  // Requires a nonzero constant term.
  Series inverse() const;

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  void adopt_variables(const std::vector<std::string>& vars);
  void check_order(const Series& other) const;
  void prune();

  std::vector<std::string> vars_;  // sorted
  int order_ = 0;
  std::map<Exponents, Rational> terms_;
};

// An exact scalar in one of two modes: a rational number, or a truncated
// series in formal deformation parameters. Arithmetic between the two
// modes throws ModeError; multiplying or shifting by a plain Rational
// coefficient is allowed in either mode.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& r) : value_(r) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(Series s) : value_(std::move(s)) {}

  bool is_series() const { return std::holds_alternative<Series>(value_); }
  const Rational& rational() const;
  const Series& series() const;

  bool is_zero() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar& operator*=(const Rational& c);
  Scalar operator-() const;
  // PoleError on a zero rational or a series without constant term.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend Scalar operator*(const Rational& c, Scalar a) { return a *= c; }

  // Equality requires equal modes; comparing across modes throws.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, Series> value_;
};

// Constants in the same mode (and truncation order) as `like`.
Scalar constant_like(const Rational& c, const Scalar& like);
inline Scalar zero_like(const Scalar& like) { return constant_like(Rational(0), like); }
inline Scalar one_like(const Scalar& like) { return constant_like(Rational(1), like); }

Scalar pow(const Scalar& base, int exponent);

}  // namespace hurwitz
