#pragma once

// Single-threaded reference versions of the OpenMP kernels. Same contracts
// as the functions of the same name in the main namespace; the parallel
// versions must agree with these bit for bit.

#include <cstdint>
#include <map>

#include "hurwitz/combinatorial.hpp"
#include "hurwitz/geometric.hpp"
#include "hurwitz/hurwitz_table.hpp"

namespace hurwitz::reference {

std::uint64_t enumerate_factorizations(const BranchConfiguration& config);

std::map<Partition, PathCount> path_counts(int n, int d, const Partition& mu, const Partition& nu);

Scalar multispecies_hurwitz(const WeightConfig& config, const Multidegree& degrees, const Partition& mu,
                            const Partition& nu);

// Entry by entry through multispecies_hurwitz.
HurwitzTable geometric_table(const WeightConfig& config, const Multidegree& max_degree);

HurwitzTable tau_coefficients(const WeightConfig& config, int N, const Multidegree& max_degree);

}  // namespace hurwitz::reference
