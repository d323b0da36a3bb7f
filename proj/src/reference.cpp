#include "hurwitz/reference.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/symmetric_group.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz::reference {

std::uint64_t enumerate_factorizations(const BranchConfiguration& config) {
  config.validate();
  const auto& group = SymmetricGroup::get(config.n);
  std::vector<std::size_t> classes;
  for (const auto& p : config.extra_profiles) classes.push_back(canonical_index(p));
  classes.push_back(canonical_index(config.mu));
  const std::size_t target = canonical_index(config.nu);

  // Odometer over all tuples (g_1, ..., g_k, a).
  std::vector<std::size_t> digit(classes.size(), 0);
  std::uint64_t total = 0;
  while (true) {
    SymmetricGroup::Element product = group.identity();
    for (std::size_t i = 0; i < classes.size(); ++i)
      product = group.multiply(product, group.class_elements(classes[i])[digit[i]]);
    if (group.class_of(product) == target) ++total;
    std::size_t i = classes.size();
    while (i > 0) {
      --i;
      if (++digit[i] < group.class_elements(classes[i]).size()) break;
      digit[i] = 0;
      if (i == 0) return total;
    }
  }
}

std::map<Partition, PathCount> path_counts(int n, int d, const Partition& mu, const Partition& nu) {
  if (n < 0 || n > kMaxPathDegree || d < 0 || d > kMaxPathLength) throw CapacityError("path_counts limits exceeded");
  if (mu.weight() != n || nu.weight() != n) throw ArgumentError("path_counts: |mu|, |nu| must equal n");
  const auto& group = SymmetricGroup::get(n);
  std::vector<Transposition> steps;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) steps.push_back({a, b});

  std::map<Partition, std::pair<std::uint64_t, std::uint64_t>> raw;  // ordered, all
  std::vector<std::size_t> digit(static_cast<std::size_t>(d), 0);
  std::vector<Transposition> seq(static_cast<std::size_t>(d));
  if (d > 0 && steps.empty()) return {};
  while (true) {
    SymmetricGroup::Element prefix = group.identity();
    for (int i = 0; i < d; ++i) {
      seq[i] = steps[digit[i]];
      prefix = group.multiply(prefix, group.transposition(seq[i].a, seq[i].b));
    }
    for (auto h : group.class_elements(canonical_index(mu))) {
      if (group.class_of(group.multiply(prefix, h)) != canonical_index(nu)) continue;
      auto info = signature_of(seq);
      auto& entry = raw[info.signature];
      ++entry.second;
      if (info.ordered) ++entry.first;
    }
    int i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++digit[i] < steps.size()) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
    if (done) break;
  }
  std::map<Partition, PathCount> out;
  const Integer order = factorial(n);
  for (const auto& [sig, c] : raw)
    out.emplace(sig, PathCount{ratio(Integer(static_cast<unsigned long>(c.first)), order),
                               ratio(Integer(static_cast<unsigned long>(c.second)), order)});
  return out;
}

Scalar multispecies_hurwitz(const WeightConfig& config, const Multidegree& degrees, const Partition& mu,
                            const Partition& nu) {
  if (mu.weight() != config.n || nu.weight() != config.n)
    throw ArgumentError("multispecies_hurwitz: |mu|, |nu| must equal n");
  Scalar sum = config.zero();
  for (const auto& term : detail::weighted_configurations(config, degrees))
    sum += term.weight * frobenius_hurwitz(BranchConfiguration{config.n, term.profiles, mu, nu});
  return sum;
}

HurwitzTable geometric_table(const WeightConfig& config, const Multidegree& max_degree) {
  HurwitzTable table(config, max_degree);
  const auto& parts = table.partitions();
  for (const auto& m : table.multidegrees())
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        table.at(m, i, j) = reference::multispecies_hurwitz(config, m, parts[i], parts[j]);
  return table;
}

HurwitzTable tau_coefficients(const WeightConfig& config, int N, const Multidegree& max_degree) {
  HurwitzTable table(config, max_degree);
  const auto& chars = character_table(config.n);
  const auto& parts = table.partitions();
  for (std::size_t l = 0; l < parts.size(); ++l) {
    auto coeffs = content_product_coeffs(config, parts[l], N, max_degree);
    for (const auto& [m, r] : coeffs)
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
          Rational weight = ratio(Integer(chars(l, i) * chars(l, j)), chars.z(i) * chars.z(j));
          table.at(m, i, j) += r * weight;
        }
  }
  return table;
}

}  // namespace hurwitz::reference
