#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Largest n for which character tables are built. Character values and
// dimensions stay below 2^63 well past this bound.
inline constexpr int kMaxCharacterDegree = 20;

// Irreducible character chi_lambda(mu) by the Murnaghan-Nakayama rule.
std::int64_t character_value(const Partition& lambda, const Partition& mu);

// n! / h_lambda.
Integer dimension(const Partition& lambda);

// Exact character table of S_n. Rows are irreducibles lambda, columns are
// classes mu, both in canonical partition order.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  std::size_t size() const { return partitions_.size(); }
  const std::vector<Partition>& partitions() const { return partitions_; }

  std::int64_t operator()(std::size_t lambda, std::size_t mu) const { return values_[lambda * size() + mu]; }
  std::int64_t at(const Partition& lambda, const Partition& mu) const;

  const Integer& z(std::size_t mu) const { return z_[mu]; }
  const Integer& hook(std::size_t lambda) const { return hooks_[lambda]; }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<std::int64_t> values_;
  std::vector<Integer> z_;
  std::vector<Integer> hooks_;
};

// Memoized per n for the process lifetime; each table is built once.
const CharacterTable& character_table(int n);

}  // namespace hurwitz
