#pragma once

#include <map>
#include <vector>

#include "hurwitz/hurwitz_table.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz {

// Coefficients of a polynomial in the slot variables, keyed by multidegree.
using DegreeCoefficients = std::map<Multidegree, Scalar>;

// Coefficients of z^0..z^max_degree of prod_{cells} G(q, (N + content) z)
// for a single species.
std::vector<Scalar> species_content_product(const Species& species, const Partition& lambda, int N,
                                            int max_degree);

// Expansion of the content product
//   r_lambda(N) = prod_species prod_{(i,j) in lambda} G_s(q_s, (N + j - i) z_s)
// for every multidegree within the rectangular bound. Degree zero gives 1.
DegreeCoefficients content_product_coeffs(const WeightConfig& config, const Partition& lambda, int N,
                                          const Multidegree& max_degree);

// S_lambda = sum_mu chi_lambda(mu)/z_mu P_mu.
std::map<Partition, Rational> schur_in_powersums(const Partition& lambda);

// Coefficients of z^m P_mu(t) P_nu(s) in sum_lambda r_lambda(N) S_lambda(t) S_lambda(s):
//   sum_lambda [z^m] r_lambda(N) chi_lambda(mu) chi_lambda(nu) / (z_mu z_nu).
// At N = 0 these are the weighted Hurwitz numbers.
HurwitzTable tau_coefficients(const WeightConfig& config, int N, const Multidegree& max_degree);

}  // namespace hurwitz
