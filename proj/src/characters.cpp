#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "degree_cache.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace {

// Memo keyed by (lambda, remaining cycle parts); shared across a whole table.
using CharacterMemo = std::map<std::pair<Partition, Partition>, std::int64_t>;

// Every rim hook of length r removable from lambda, as (remainder, sign).
// Works on the beta-set {lambda_i + l - 1 - i}: removing a rim hook moves one
// bead down by r into an empty position, and the height parity equals the
// number of beads jumped over.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) {
      int part = moved[k] - (len - 1 - k);
      if (part > 0) parts.push_back(part);
    }
    out.emplace_back(Partition(std::move(parts)), jumped % 2 ? -1 : 1);
  }
  return out;
}

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu, CharacterMemo& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto parts = mu.parts();
  Partition rest(std::vector<int>(parts.begin() + 1, parts.end()));
  std::int64_t total = 0;
  for (const auto& [smaller, sign] : remove_rim_hooks(lambda, parts.front()))
    total += sign * murnaghan_nakayama(smaller, rest, memo);
  memo.emplace(std::move(key), total);
  return total;
}

void require_degree(int n) {
  if (n < 0) throw ArgumentError("character degree must be nonnegative");
  if (n > kMaxCharacterDegree)
    throw CapacityError("character tables are limited to n <= " + std::to_string(kMaxCharacterDegree));
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw ArgumentError("character_value: |lambda| != |mu|");
  require_degree(lambda.weight());
  CharacterMemo memo;
  return murnaghan_nakayama(lambda, mu, memo);
}

Integer dimension(const Partition& lambda) { return factorial(lambda.weight()) / hook_product(lambda); }

CharacterTable::CharacterTable(int n) : n_(n) {
  require_degree(n);
  partitions_ = enumerate_partitions(n);
  const std::size_t count = partitions_.size();
  values_.resize(count * count);
  CharacterMemo memo;
  for (std::size_t l = 0; l < count; ++l)
    for (std::size_t m = 0; m < count; ++m)
      values_[l * count + m] = murnaghan_nakayama(partitions_[l], partitions_[m], memo);
  for (const auto& p : partitions_) {
    z_.push_back(z_mu(p));
    hooks_.push_back(hook_product(p));
  }
}

std::int64_t CharacterTable::at(const Partition& lambda, const Partition& mu) const {
  if (lambda.weight() != n_ || mu.weight() != n_) throw ArgumentError("CharacterTable::at: weight mismatch");
  return (*this)(canonical_index(lambda), canonical_index(mu));
}

const CharacterTable& character_table(int n) {
  require_degree(n);
  static detail::DegreeCache<CharacterTable> cache;
  return cache.get(n, [](int k) { return CharacterTable(k); });
}

}  // namespace hurwitz
