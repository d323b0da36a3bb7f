#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hurwitz/hurwitz_table.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz {

// Path-count oracles enumerate (n choose 2)^d sequences.
inline constexpr int kMaxPathDegree = 5;
inline constexpr int kMaxPathLength = 4;
// Group-algebra expansions work in C[S_n] with n! coordinates.
inline constexpr int kMaxAlgebraDegree = 6;

// A step (a b) of a Cayley-graph path, 1 <= a < b.
struct Transposition {
  int a = 1;
  int b = 2;
};

struct SignatureInfo {
  // Sizes of the groups of steps sharing a second element.
  Partition signature;
  // Steps with equal second elements are consecutive and the runs'
  // second elements strictly increase.
  bool ordered = false;
};

SignatureInfo signature_of(std::span<const Transposition> steps);

// Class-to-class path counts for one signature, both normalized by 1/n!:
//   all     = m~: sequences of any order with this signature;
//   ordered = m:  only ordered sequences.
struct PathCount {
  Rational ordered;
  Rational all;
};

// Brute force over h in cyc(mu) and all length-d transposition sequences s
// with s_1 ... s_d h in cyc(nu). n <= kMaxPathDegree, d <= kMaxPathLength.
std::map<Partition, PathCount> path_counts(int n, int d, const Partition& mu, const Partition& nu);

// D_n x D_n matrix over the class sums: entry (mu, nu) is the coefficient of
// C_nu in X C_mu for a central element X.
class TransferMatrix {
 public:
  TransferMatrix(int n, Scalar zero);
  static TransferMatrix identity(int n, const Scalar& like);

  int n() const { return n_; }
  std::size_t size() const { return partitions_.size(); }
  const std::vector<Partition>& partitions() const { return partitions_; }

  Scalar& operator()(std::size_t mu, std::size_t nu) { return entries_[mu * size() + nu]; }
  const Scalar& operator()(std::size_t mu, std::size_t nu) const { return entries_[mu * size() + nu]; }
  const Scalar& at(const Partition& mu, const Partition& nu) const;

  // Divides column nu by z_nu, giving Hurwitz-normalized numbers.
  TransferMatrix hurwitz_normalized() const;

  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);
  friend bool operator==(const TransferMatrix& a, const TransferMatrix& b);

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<Scalar> entries_;
};

// Degree-c part of prod_b G(z J_b) acting on the class sums, computed
// spectrally: sum_lambda [z^c] r_lambda chi_lambda(mu) chi_lambda(nu) / z_mu.
TransferMatrix transfer_matrix(const Species& species, int c, int n);

// Same matrix by expanding prod_b G(z J_b) C_mu in the group algebra, i.e.
// summing the weights of all ordered transposition paths leaving cyc(mu).
// n <= kMaxAlgebraDegree.
TransferMatrix transfer_matrix_by_paths(const Species& species, int c, int n);

enum class TransferRoute { Spectral, Paths };

// Product over species of their transfer matrices at the given degrees.
TransferMatrix multispecies_transfer(const WeightConfig& config, const Multidegree& degrees,
                                     TransferRoute route = TransferRoute::Spectral);

// Hurwitz-normalized F^d for one family, spectral route.
Scalar combinatorial_hurwitz(Family family, const Scalar& q, int d, const Partition& mu, const Partition& nu);

// F^d = (1/d!) sum_lambda W~_lambda m~^lambda with W~_lambda = prod lambda_i! G_{lambda_i},
// from brute-force path counts.
Scalar combinatorial_hurwitz_from_paths(Family family, const Scalar& q, int d, const Partition& mu,
                                        const Partition& nu);

// F^d = sum_lambda prod_i G_{lambda_i} m^lambda, from ordered path counts.
Scalar combinatorial_hurwitz_ordered(Family family, const Scalar& q, int d, const Partition& mu,
                                     const Partition& nu);

HurwitzTable combinatorial_table(const WeightConfig& config, const Multidegree& max_degree,
                                 TransferRoute route = TransferRoute::Spectral);

// c[alpha][beta][gamma] = #{(x, y) : x in alpha, y in beta, x y = g} for a
// fixed g in gamma, flattened row-major. Brute force over S_n.
std::vector<std::uint64_t> class_structure_constants(int n);

// Expands prod_a prod_s G_s(z_s J_a) in the group algebra up to total slot
// degree max_total, multiplies it onto F_lambda = h_lambda^{-1} sum chi_lambda(mu) C_mu
// with brute-force class structure constants, and reports whether the result
// is the content product r_lambda times F_lambda. |lambda| <= 5.
bool jm_eigenvalue_check(const WeightConfig& config, const Partition& lambda, int max_total);

}  // namespace hurwitz
