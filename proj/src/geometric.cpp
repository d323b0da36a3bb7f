#include "hurwitz/geometric.hpp"

#include <functional>
#include <map>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/symmetric_group.hpp"

namespace hurwitz {

void BranchConfiguration::validate() const {
  if (mu.weight() != n || nu.weight() != n) throw ArgumentError("profiles mu, nu must have weight n");
  for (const auto& p : extra_profiles) {
    if (p.weight() != n) throw ArgumentError("extra profile " + p.to_string() + " does not have weight n");
    if (p.is_identity()) throw ArgumentError("extra profiles must be nontrivial");
  }
}

namespace detail {

std::vector<Rational> profile_class_factors(int n, const std::vector<Partition>& profiles) {
  const auto& table = character_table(n);
  std::vector<std::size_t> columns;
  for (const auto& p : profiles) columns.push_back(canonical_index(p));
  std::vector<Rational> out(table.size());
  for (std::size_t l = 0; l < table.size(); ++l) {
    Rational factor = 1;
    for (std::size_t c : columns) factor *= ratio(Integer(table.hook(l) * table(l, c)), table.z(c));
    out[l] = factor;
  }
  return out;
}

std::vector<WeightedProfiles> weighted_configurations(const WeightConfig& config, const Multidegree& degrees) {
  config.validate();
  if (degrees.size() != config.slots()) throw ArgumentError("multidegree length differs from species count");
  std::vector<WeightedProfiles> combined{{{}, config.one()}};
  for (std::size_t s = 0; s < config.slots(); ++s) {
    const Species& species = config.species[s];
    const int d = degrees[s];
    if (d < 0) throw ArgumentError("degrees must be nonnegative");
    std::map<std::vector<int>, Scalar> weight_cache;
    std::vector<WeightedProfiles> local;
    for (auto& tuple : profile_tuples(config.n, d)) {
      std::vector<int> colengths;
      for (const auto& p : tuple) colengths.push_back(colength(p));
      auto it = weight_cache.find(colengths);
      if (it == weight_cache.end())
        it = weight_cache.emplace(colengths, symmetrized_weight(species.family, species.parameter, colengths)).first;
      Scalar w = it->second;
      const int k = static_cast<int>(tuple.size());
      if (species.family == Family::H && (k + d) % 2 != 0) w = -w;
      local.push_back({std::move(tuple), std::move(w)});
    }
    std::vector<WeightedProfiles> next;
    for (const auto& head : combined) {
      for (const auto& tail : local) {
        WeightedProfiles joined = head;
        joined.profiles.insert(joined.profiles.end(), tail.profiles.begin(), tail.profiles.end());
        joined.weight *= tail.weight;
        next.push_back(std::move(joined));
      }
    }
    combined = std::move(next);
  }
  return combined;
}

}  // namespace detail

Rational frobenius_hurwitz(const BranchConfiguration& config) {
  config.validate();
  const auto& table = character_table(config.n);
  auto factors = detail::profile_class_factors(config.n, config.extra_profiles);
  const std::size_t mu = canonical_index(config.mu);
  const std::size_t nu = canonical_index(config.nu);
  Rational sum = 0;
  for (std::size_t l = 0; l < table.size(); ++l)
    sum += factors[l] * Rational(table(l, mu) * table(l, nu)) / Rational(table.z(mu) * table.z(nu));
  return sum;
}

std::uint64_t enumerate_factorizations(const BranchConfiguration& config) {
  config.validate();
  const auto& group = SymmetricGroup::get(config.n);
  std::vector<const std::vector<SymmetricGroup::Element>*> factors;
  for (const auto& p : config.extra_profiles) factors.push_back(&group.class_elements(canonical_index(p)));
  factors.push_back(&group.class_elements(canonical_index(config.mu)));
  const std::size_t target = canonical_index(config.nu);

  // g_1 ... g_k a b = 1 has exactly one solution b = (g_1 ... g_k a)^{-1},
  // which lies in cyc(nu) iff the product does.
  std::function<std::uint64_t(std::size_t, SymmetricGroup::Element)> count =
      [&](std::size_t depth, SymmetricGroup::Element prefix) -> std::uint64_t {
    if (depth == factors.size()) return group.class_of(prefix) == target ? 1 : 0;
    std::uint64_t total = 0;
    for (auto g : *factors[depth]) total += count(depth + 1, group.multiply(prefix, g));
    return total;
  };

  const auto& first = *factors.front();
  auto partial = parallel_map(first.size(), [&](std::size_t i) { return count(1, first[i]); });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<std::vector<Partition>> profile_tuples(int n, int d) {
  if (d < 0) throw ArgumentError("profile_tuples: negative degree");
  std::vector<std::vector<Partition>> by_colength(static_cast<std::size_t>(d) + 1);
  for (int c = 1; c <= d; ++c) by_colength[c] = partitions_with_colength(n, c);

  std::vector<std::vector<Partition>> out;
  std::vector<Partition> current;
  std::function<void(int, int)> extend = [&](int remaining, int slots) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    // Each remaining slot needs colength at least 1.
    for (int c = 1; c <= remaining - (slots - 1); ++c) {
      for (const auto& p : by_colength[c]) {
        current.push_back(p);
        extend(remaining - c, slots - 1);
        current.pop_back();
      }
    }
  };
  for (int k = 0; k <= d; ++k) extend(d, k);
  return out;
}

Scalar quantum_hurwitz(Family family, const Scalar& q, int d, const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) throw ArgumentError("quantum_hurwitz: |mu| != |nu|");
  WeightConfig config{mu.weight(), {Species{family, q, {}}}};
  return multispecies_hurwitz(config, {d}, mu, nu);
}

Scalar multispecies_hurwitz(const WeightConfig& config, const Multidegree& degrees, const Partition& mu,
                            const Partition& nu) {
  if (mu.weight() != config.n || nu.weight() != config.n)
    throw ArgumentError("multispecies_hurwitz: |mu|, |nu| must equal n");
  auto terms = detail::weighted_configurations(config, degrees);
  auto parts = parallel_map(terms.size(), [&](std::size_t i) {
    BranchConfiguration branch{config.n, terms[i].profiles, mu, nu};
    return terms[i].weight * frobenius_hurwitz(branch);
  });
  Scalar sum = config.zero();
  for (const auto& p : parts) sum += p;
  return sum;
}

HurwitzTable geometric_table(const WeightConfig& config, const Multidegree& max_degree) {
  HurwitzTable table(config, max_degree);
  const auto& chars = character_table(config.n);
  const std::size_t count = chars.size();
  for (const auto& m : table.multidegrees()) {
    auto terms = detail::weighted_configurations(config, m);
    // Per term, the lambda-resolved weight; summed in canonical term order.
    auto resolved = parallel_map(terms.size(), [&](std::size_t i) {
      auto factors = detail::profile_class_factors(config.n, terms[i].profiles);
      std::vector<Scalar> out;
      out.reserve(count);
      for (const auto& f : factors) out.push_back(terms[i].weight * f);
      return out;
    });
    std::vector<Scalar> by_lambda(count, config.zero());
    for (const auto& r : resolved)
      for (std::size_t l = 0; l < count; ++l) by_lambda[l] += r[l];

    auto rows = parallel_map(count, [&](std::size_t mu) {
      std::vector<Scalar> row(count, config.zero());
      for (std::size_t nu = 0; nu < count; ++nu) {
        Rational norm(Integer(1), chars.z(mu) * chars.z(nu));
        for (std::size_t l = 0; l < count; ++l)
          if (chars(l, mu) != 0 && chars(l, nu) != 0)
            row[nu] += by_lambda[l] * Rational(Rational(chars(l, mu) * chars(l, nu)) * norm);
      }
      return row;
    });
    for (std::size_t mu = 0; mu < count; ++mu)
      for (std::size_t nu = 0; nu < count; ++nu) table.at(m, mu, nu) = rows[mu][nu];
  }
  return table;
}

}  // namespace hurwitz
