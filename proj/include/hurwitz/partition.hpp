#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

using Integer = mpz_class;

// Largest n accepted by enumerate_partitions (D_40 = 37338).
inline constexpr int kMaxPartitionDegree = 40;

// A weakly decreasing sequence of positive integers.
//
// Ordering is lexicographic on the parts, so the canonical table order
// (reverse lexicographic: (3), (2,1), (1,1,1)) is descending under <.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Grammar: "" | int ("," int)*, strictly positive, weakly decreasing.
  static Partition parse(std::string_view text);
  static Partition identity(int n);  // (1^n)
  static Partition row(int n);       // (n)

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  bool is_identity() const { return parts_.empty() || parts_.front() == 1; }

  // Multiplicity of part size i.
  int multiplicity(int i) const;
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

// Index of mu within enumerate_partitions(|mu|).
std::size_t canonical_index(const Partition& mu);

// Nontrivial partitions of n with colength c, canonical order.
std::vector<Partition> partitions_with_colength(int n, int c);

// |mu| - l(mu): the minimal number of transpositions with product of type mu.
int colength(const Partition& mu);

// Centralizer order prod_i i^{m_i} m_i!.
Integer z_mu(const Partition& mu);

Integer hook_product(const Partition& lambda);

// Contents j - i of the cells (i, j), row by row.
std::vector<int> contents(const Partition& lambda);

// Genus from the Riemann-Hurwitz relation d = 2g - 2 + l(mu) + l(nu).
// Absent when g is negative or not an integer.
std::optional<int> genus_from_data(int d, const Partition& mu, const Partition& nu);

Integer factorial(int n);

}  // namespace hurwitz
