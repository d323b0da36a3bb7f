#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Brute-force oracles enumerate S_n explicitly; n! = 720 at the limit.
inline constexpr int kMaxBruteForceDegree = 6;

// Cycle type of a permutation of {0, ..., n-1} given in one-line notation.
Partition cycle_type(std::span<const int> perm);

// S_n with elements numbered in lexicographic order of one-line notation
// and a full multiplication table. Element 0 is the identity.
class SymmetricGroup {
 public:
  using Element = std::uint16_t;

  // Cached per n; CapacityError above kMaxBruteForceDegree.
  static const SymmetricGroup& get(int n);

  explicit SymmetricGroup(int n);

  int degree() const { return n_; }
  std::size_t order() const { return perms_.size(); }
  Element identity() const { return 0; }

  // (x * y)(i) = x(y(i)): y acts first.
  Element multiply(Element x, Element y) const { return table_[x * order() + y]; }
  Element inverse(Element x) const { return inverses_[x]; }

  std::span<const int> permutation(Element x) const { return perms_[x]; }
  // Index of the element's cycle type in enumerate_partitions(n).
  std::size_t class_of(Element x) const { return class_[x]; }
  const std::vector<Element>& class_elements(std::size_t class_index) const { return classes_[class_index]; }
  std::size_t class_count() const { return classes_.size(); }

  // The transposition swapping a and b, 1-based.
  Element transposition(int a, int b) const;

 private:
  int n_;
  std::vector<std::vector<int>> perms_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> class_;
  std::vector<std::vector<Element>> classes_;
};

}  // namespace hurwitz
