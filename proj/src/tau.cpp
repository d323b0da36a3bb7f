#include "hurwitz/tau.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

std::vector<Scalar> species_content_product(const Species& species, const Partition& lambda, int N,
                                            int max_degree) {
  if (max_degree < 0) throw ArgumentError("degree bound must be nonnegative");
  std::vector<Scalar> coeffs;
  for (int i = 0; i <= max_degree; ++i) coeffs.push_back(weight_coefficient(species.family, species.parameter, i));

  std::vector<Scalar> product(static_cast<std::size_t>(max_degree) + 1, zero_like(species.parameter));
  product[0] = one_like(species.parameter);
  for (int c : contents(lambda)) {
    const Integer content = N + c;
    if (content == 0) continue;  // G(q, 0) = 1
    std::vector<Scalar> factor;
    Integer scale = 1;
    for (int i = 0; i <= max_degree; ++i) {
      factor.push_back(coeffs[i] * Rational(scale));
      scale *= content;
    }
    std::vector<Scalar> next(product.size(), zero_like(species.parameter));
    for (std::size_t a = 0; a < product.size(); ++a) {
      if (product[a].is_zero()) continue;
      for (std::size_t b = 0; a + b < product.size(); ++b) next[a + b] += product[a] * factor[b];
    }
    product = std::move(next);
  }
  return product;
}

DegreeCoefficients content_product_coeffs(const WeightConfig& config, const Partition& lambda, int N,
                                          const Multidegree& max_degree) {
  config.validate();
  if (lambda.weight() != config.n) throw ArgumentError("content_product_coeffs: |lambda| != n");
  if (max_degree.size() != config.slots()) throw ArgumentError("degree bound length differs from species count");

  // Distinct slots use distinct variables, so the expansion factorizes.
  std::vector<std::vector<Scalar>> per_slot;
  for (std::size_t s = 0; s < config.slots(); ++s)
    per_slot.push_back(species_content_product(config.species[s], lambda, N, max_degree[s]));

  DegreeCoefficients out;
  for (const auto& m : multidegrees_up_to(max_degree)) {
    Scalar value = config.one();
    for (std::size_t s = 0; s < m.size(); ++s) value *= per_slot[s][m[s]];
    out.emplace(m, std::move(value));
  }
  return out;
}

std::map<Partition, Rational> schur_in_powersums(const Partition& lambda) {
  const auto& table = character_table(lambda.weight());
  const std::size_t l = canonical_index(lambda);
  std::map<Partition, Rational> out;
  for (std::size_t mu = 0; mu < table.size(); ++mu)
    if (table(l, mu) != 0) out.emplace(table.partitions()[mu], ratio(Integer(table(l, mu)), table.z(mu)));
  return out;
}

HurwitzTable tau_coefficients(const WeightConfig& config, int N, const Multidegree& max_degree) {
  HurwitzTable table(config, max_degree);
  const auto& chars = character_table(config.n);
  const std::size_t count = chars.size();

  auto products = parallel_map(count, [&](std::size_t l) {
    return content_product_coeffs(config, chars.partitions()[l], N, max_degree);
  });

  const auto degrees = table.multidegrees();
  auto rows = parallel_map(degrees.size() * count, [&](std::size_t task) {
    const auto& m = degrees[task / count];
    const std::size_t mu = task % count;
    std::vector<Scalar> row(count, config.zero());
    for (std::size_t nu = 0; nu < count; ++nu) {
      Rational norm(ratio(Integer(1), chars.z(mu) * chars.z(nu)));
      for (std::size_t l = 0; l < count; ++l) {
        const std::int64_t chi = chars(l, mu) * chars(l, nu);
        if (chi != 0) row[nu] += products[l].at(m) * Rational(Rational(chi) * norm);
      }
    }
    return row;
  });

  for (std::size_t task = 0; task < rows.size(); ++task)
    for (std::size_t nu = 0; nu < count; ++nu) table.at(degrees[task / count], task % count, nu) = rows[task][nu];
  return table;
}

}  // namespace hurwitz
