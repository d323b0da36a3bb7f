#include "hurwitz/qweights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {
namespace {

// 1 - q^j, with a pole check in rational mode.
Scalar one_minus_power(const Scalar& q, int j) {
  Scalar out = one_like(q) - pow(q, j);
  if (out.is_zero()) throw PoleError("1 - q^" + std::to_string(j) + " vanishes");
  return out;
}

// 1 / (q;q)_i
Scalar inverse_pochhammer(const Scalar& q, int i) {
  Scalar denom = one_like(q);
  for (int j = 1; j <= i; ++j) denom *= one_minus_power(q, j);
  return denom.inverse();
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::EPrime: return "E'";
    case Family::H: return "H";
  }
  return "?";
}

bool is_e_class(Family f) { return f != Family::H; }

Scalar weight_coefficient(Family family, const Scalar& q, int i) {
  if (i < 0) throw ArgumentError("weight_coefficient: negative index");
  Scalar base = inverse_pochhammer(q, i);
  switch (family) {
    case Family::E: return base * pow(q, i * (i - 1) / 2);
    case Family::EPrime: return base * pow(q, i * (i + 1) / 2);
    case Family::H: return base;
  }
  return base;
}

Scalar hybrid_coefficient(const Scalar& q, const Scalar& p, int i) {
  if (i < 0) throw ArgumentError("hybrid_coefficient: negative index");
  Scalar sum = zero_like(q);
  for (int m = 0; m <= i; ++m)
    sum += pow(q, m * (m - 1) / 2) * inverse_pochhammer(q, m) * inverse_pochhammer(p, i - m);
  return sum;
}

std::vector<Scalar> quantum_dilog_coeffs(const Scalar& q, int count) {
  if (count < 1) throw ArgumentError("quantum_dilog_coeffs: count must be positive");
  std::vector<Scalar> out;
  out.reserve(count);
  for (int k = 1; k <= count; ++k) out.push_back(one_minus_power(q, k).inverse() * Rational(1, k));
  return out;
}

Scalar symmetrized_weight(Family family, const Scalar& q, std::vector<int> colengths) {
  for (int c : colengths)
    if (c < 1) throw ArgumentError("symmetrized_weight: colengths must be positive");
  const int k = static_cast<int>(colengths.size());
  if (k == 0) return one_like(q);

  std::sort(colengths.begin(), colengths.end());
  Scalar sum = zero_like(q);
  Integer orderings = 0;
  do {
    Scalar term = one_like(q);
    int partial = 0;
    int exponent = 0;
    for (int m = 0; m < k; ++m) {
      partial += colengths[m];
      term *= one_minus_power(q, partial).inverse();
      if (family == Family::EPrime || (family == Family::E && m < k - 1)) exponent += partial;
    }
    sum += term * pow(q, exponent);
    ++orderings;
  } while (std::next_permutation(colengths.begin(), colengths.end()));

  // Each distinct ordering stands for prod_i m_i! permutations, so the
  // 1/k! average over S_k is the plain average over distinct orderings.
  return sum * Rational(Integer(1), orderings);
}

Scalar bose_factor(const Scalar& q, int c) {
  if (q.is_series()) throw ArgumentError("bose_factor requires a rational parameter");
  if (q.rational() <= 0 || q.rational() >= 1) throw ArgumentError("bose_factor requires 0 < q < 1");
  if (c < 1) throw ArgumentError("bose_factor requires c >= 1");
  Scalar qc = pow(q, c);
  return qc / (one_like(q) - qc);
}

void Species::validate() const {
  if (parameter.is_series()) {
    if (parameter.series().constant_term() != 0)
      throw ArgumentError("formal species parameter must have zero constant term");
    return;
  }
  if (abs(parameter.rational()) >= 1) throw ArgumentError("species parameter must satisfy |q| < 1");
}

std::string Species::to_string() const {
  std::string key = family == Family::H ? "p" : "q";
  if (parameter.is_series()) return hurwitz::to_string(family) + ":" + parameter_name;
  return hurwitz::to_string(family) + ":" + key + "=" + format_rational(parameter.rational());
}

Species parse_species(std::string_view text, int order) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ArgumentError("species must look like E:q=1/2");
  auto family_text = text.substr(0, colon);
  Species s;
  if (family_text == "E")
    s.family = Family::E;
  else if (family_text == "E'" || family_text == "Ep" || family_text == "Eprime")
    s.family = Family::EPrime;
  else if (family_text == "H")
    s.family = Family::H;
  else
    throw ArgumentError("unknown species family \"" + std::string(family_text) + "\"");

  auto rest = text.substr(colon + 1);
  auto eq = rest.find('=');
  auto name = rest.substr(0, eq);
  if (name.empty()) throw ArgumentError("species parameter needs a name");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw ArgumentError("bad species parameter name \"" + std::string(name) + "\"");
  if (eq == std::string_view::npos) {
    s.parameter_name = std::string(name);
    s.parameter = Scalar(Series::variable(s.parameter_name, order));
  } else {
    s.parameter = Scalar(parse_rational(rest.substr(eq + 1)));
  }
  s.validate();
  return s;
}

void WeightConfig::validate() const {
  if (n < 0) throw ArgumentError("degree n must be nonnegative");
  for (const auto& s : species) s.validate();
  for (std::size_t i = 1; i < species.size(); ++i)
    if (species[i].parameter.is_series() != species[0].parameter.is_series())
      throw ModeError("all species must be rational, or all formal");
}

bool WeightConfig::series_mode() const { return !species.empty() && species.front().parameter.is_series(); }

Scalar WeightConfig::zero() const { return species.empty() ? Scalar(0) : zero_like(species.front().parameter); }

Scalar WeightConfig::one() const { return species.empty() ? Scalar(1) : one_like(species.front().parameter); }

std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound) {
  for (int b : bound)
    if (b < 0) throw ArgumentError("degree bounds must be nonnegative");
  std::vector<Multidegree> out;
  Multidegree current(bound.size(), 0);
  while (true) {
    out.push_back(current);
    auto i = static_cast<std::ptrdiff_t>(bound.size()) - 1;
    while (i >= 0 && current[i] == bound[i]) current[i--] = 0;
    if (i < 0) return out;
    ++current[i];
  }
}

int total_degree(const Multidegree& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace hurwitz
