#include "hurwitz/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "degree_cache.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace {

std::uint32_t encode(std::span<const int> perm) {
  std::uint32_t key = 0;
  for (int v : perm) key = key * 8 + static_cast<std::uint32_t>(v);
  return key;
}

}  // namespace

Partition cycle_type(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  if (n < 0 || n > kMaxBruteForceDegree)
    throw CapacityError("explicit symmetric groups are limited to n <= " + std::to_string(kMaxBruteForceDegree));
  static detail::DegreeCache<SymmetricGroup> cache;
  return cache.get(n, [](int k) { return SymmetricGroup(k); });
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 0 || n > kMaxBruteForceDegree)
    throw CapacityError("explicit symmetric groups are limited to n <= " + std::to_string(kMaxBruteForceDegree));
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::unordered_map<std::uint32_t, Element> index;
  for (std::size_t i = 0; i < perms_.size(); ++i) index.emplace(encode(perms_[i]), static_cast<Element>(i));

  const std::size_t count = perms_.size();
  table_.resize(count * count);
  inverses_.resize(count);
  std::vector<int> composed(n);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      for (int i = 0; i < n; ++i) composed[i] = perms_[x][perms_[y][i]];
      Element xy = index.at(encode(composed));
      table_[x * count + y] = xy;
      if (xy == 0) inverses_[x] = static_cast<Element>(y);
    }
  }

  auto types = enumerate_partitions(n);
  classes_.resize(types.size());
  class_.resize(count);
  for (std::size_t x = 0; x < count; ++x) {
    class_[x] = canonical_index(cycle_type(perms_[x]));
    classes_[class_[x]].push_back(static_cast<Element>(x));
  }
}

SymmetricGroup::Element SymmetricGroup::transposition(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) throw ArgumentError("invalid transposition");
  std::vector<int> p(n_);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a - 1], p[b - 1]);
  auto it = std::find(perms_.begin(), perms_.end(), p);
  return static_cast<Element>(it - perms_.begin());
}

}  // namespace hurwitz
