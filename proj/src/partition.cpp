#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "degree_cache.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      throw ArgumentError("malformed partition \"" + std::string(text) + "\"");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::identity(int n) { return Partition(std::vector<int>(n, 1)); }

Partition Partition::row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> columns(parts_.empty() ? 0 : parts_.front(), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++columns[j];
  return Partition(std::move(columns));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::vector<Partition> build_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

detail::DegreeCache<std::vector<Partition>>& partition_cache() {
  static detail::DegreeCache<std::vector<Partition>> cache;
  return cache;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ArgumentError("partition degree must be nonnegative");
  if (n > kMaxPartitionDegree)
    throw CapacityError("enumerate_partitions supports n <= " + std::to_string(kMaxPartitionDegree));
  return partition_cache().get(n, build_partitions);
}

std::size_t canonical_index(const Partition& mu) {
  if (mu.weight() > kMaxPartitionDegree)
    throw CapacityError("partition degree exceeds " + std::to_string(kMaxPartitionDegree));
  const auto& all = partition_cache().get(mu.weight(), build_partitions);
  auto it = std::lower_bound(all.begin(), all.end(), mu, std::greater<>());
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<Partition> partitions_with_colength(int n, int c) {
  std::vector<Partition> out;
  if (c < 1 || c > n - 1) return out;
  for (const auto& mu : enumerate_partitions(n))
    if (colength(mu) == c) out.push_back(mu);
  return out;
}

int colength(const Partition& mu) { return mu.weight() - mu.length(); }

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer z_mu(const Partition& mu) {
  Integer out = 1;
  auto parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int m = static_cast<int>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    out *= power * factorial(m);
    i = j;
  }
  return out;
}

Integer hook_product(const Partition& lambda) {
  Partition columns = lambda.conjugate();
  Integer out = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      out *= (lambda[i] - j - 1) + (columns[j] - i - 1) + 1;
  return out;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(lambda.weight());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back(j - i);
  return out;
}

std::optional<int> genus_from_data(int d, const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) throw ArgumentError("genus_from_data: |mu| != |nu|");
  int twice = d + 2 - mu.length() - nu.length();
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

}  // namespace hurwitz
