#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/hurwitz_table.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz {

// Branch data of an n-sheeted cover of the sphere: k extra branch points
// with nontrivial profiles plus the two distinguished profiles mu, nu.
struct BranchConfiguration {
  int n = 0;
  std::vector<Partition> extra_profiles;
  Partition mu;
  Partition nu;

  void validate() const;
};

// Frobenius-Schur character sum
//   sum_lambda h_lambda^k (chi(mu)/z_mu)(chi(nu)/z_nu) prod_i chi(mu_i)/z_{mu_i},
// which equals (1/n!) #{(g_1..g_k, a, b) in the classes : g_1...g_k a b = 1}.
// Not restricted to connected covers.
Rational frobenius_hurwitz(const BranchConfiguration& config);

// The tuple count above without the 1/n!. Brute force, n <= 6.
std::uint64_t enumerate_factorizations(const BranchConfiguration& config);

// Ordered k-tuples of nontrivial profiles of n whose colengths sum to d,
// k = 0..d, grouped by k, canonical partition order within each slot.
std::vector<std::vector<Partition>> profile_tuples(int n, int d);

// Weighted Hurwitz number H^d for one family:
//   sum over ordered tuples (mu_1..mu_k) with sum colength = d of
//   sign * symmetrized_weight(colengths) * frobenius_hurwitz(tuple, mu, nu),
// where sign = (-1)^{k+d} for H and +1 for E, E'. Ordered tuples pair with
// the 1/k!-symmetrized weights; this is the convention under which the
// geometric, combinatorial and tau-coefficient numbers coincide.
Scalar quantum_hurwitz(Family family, const Scalar& q, int d, const Partition& mu, const Partition& nu);

// Multispecies H^{(c,d)}: each species s contributes its own collection of
// branch points with colength total degrees[s] (possibly empty), weighted
// by that species' symmetrized weight; the combined configuration is
// counted by frobenius_hurwitz.
Scalar multispecies_hurwitz(const WeightConfig& config, const Multidegree& degrees, const Partition& mu,
                            const Partition& nu);

// Every entry of multispecies_hurwitz up to a rectangular degree bound.
HurwitzTable geometric_table(const WeightConfig& config, const Multidegree& max_degree);

namespace detail {

// One term of the multispecies sum: a combined profile list and its weight
// (product of per-species signed symmetrized weights).
struct WeightedProfiles {
  std::vector<Partition> profiles;
  Scalar weight;
};

std::vector<WeightedProfiles> weighted_configurations(const WeightConfig& config, const Multidegree& degrees);

// h_lambda^k prod_i chi_lambda(mu_i)/z_{mu_i} for every lambda of n.
std::vector<Rational> profile_class_factors(int n, const std::vector<Partition>& profiles);

}  // namespace detail

}  // namespace hurwitz
