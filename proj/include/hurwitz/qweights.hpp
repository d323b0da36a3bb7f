#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace hurwitz {

// Weight generating functions, each a q-deformed infinite product:
//   E(q,z)  = prod_{k>=0} (1 + q^k z)      coefficients q^{i(i-1)/2} / (q;q)_i
//   E'(q,z) = prod_{k>=1} (1 + q^k z)      coefficients q^{i(i+1)/2} / (q;q)_i
//   H(q,z)  = prod_{k>=0} (1 - q^k z)^{-1} coefficients 1 / (q;q)_i
// E and E' are the "E class" (branch points counted with sign +1),
// H is the "H class" (sign (-1)^{k+d}).
enum class Family { E, EPrime, H };

std::string to_string(Family f);
bool is_e_class(Family f);

// Coefficient of z^i in the family's generating function.
Scalar weight_coefficient(Family family, const Scalar& q, int i);

// Coefficient of z^i in prod_{k>=0} (1 + q^k z)(1 - p^k z)^{-1}.
Scalar hybrid_coefficient(const Scalar& q, const Scalar& p, int i);

// Coefficients of z^1..z^count of Li_2(q, z) = sum_k z^k / (k (1 - q^k)).
std::vector<Scalar> quantum_dilog_coeffs(const Scalar& q, int count);

// Symmetrized branch-point weight for a collection of colengths
// l_1..l_k (all >= 1). With partial sums S_m = l_{s(1)} + ... + l_{s(m)}:
//   H:  (1/k!) sum_s prod_m 1 / (1 - q^{S_m})
//   E:  (1/k!) sum_s q^{S_1 + ... + S_{k-1}} prod_m 1 / (1 - q^{S_m})
//   E': (1/k!) sum_s q^{S_1 + ... + S_k}     prod_m 1 / (1 - q^{S_m})
// The empty collection has weight 1.
Scalar symmetrized_weight(Family family, const Scalar& q, std::vector<int> colengths);

// q^c / (1 - q^c), the Bose occupation number at energy c (hbar omega = 1,
// q = exp(-beta)). Requires a rational 0 < q < 1.
Scalar bose_factor(const Scalar& q, int c);

// One factor of a multispecies weight generating function.
struct Species {
  Family family = Family::E;
  Scalar parameter;
  // Formal variable name in series mode, empty in rational mode.
  std::string parameter_name;

  // Rational: |q| < 1. Series: zero constant term.
  void validate() const;
  std::string to_string() const;
};

// "E:q=1/2", "E':q=1/3", "H:p=1/5" (rational mode) or "E:q", "H:p"
// (series mode, formal parameter named after the key, truncated at `order`).
Species parse_species(std::string_view text, int order = 12);

// A product of species over S_n; slot s carries species[s]'s expansion
// variable and its entry of every multidegree.
struct WeightConfig {
  int n = 0;
  std::vector<Species> species;

  void validate() const;
  std::size_t slots() const { return species.size(); }
  bool series_mode() const;
  Scalar zero() const;
  Scalar one() const;
};

using Multidegree = std::vector<int>;

// Every multidegree m with 0 <= m_s <= bound_s, lexicographic order.
std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound);

int total_degree(const Multidegree& m);

}  // namespace hurwitz
