#include "hurwitz/hurwitz_table.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

HurwitzTable::HurwitzTable(WeightConfig config, Multidegree max_degree)
    : config_(std::move(config)), max_degree_(std::move(max_degree)) {
  config_.validate();
  if (max_degree_.size() != config_.slots())
    throw ArgumentError("degree bound has " + std::to_string(max_degree_.size()) + " entries for " +
                        std::to_string(config_.slots()) + " species");
  partitions_ = enumerate_partitions(config_.n);
  const std::size_t cells = partitions_.size() * partitions_.size();
  for (auto& m : multidegrees_up_to(max_degree_)) blocks_.emplace(m, std::vector<Scalar>(cells, config_.zero()));
}

std::vector<Scalar>& HurwitzTable::block(const Multidegree& degrees) {
  auto it = blocks_.find(degrees);
  if (it == blocks_.end()) throw ArgumentError("multidegree outside table bounds");
  return it->second;
}

const std::vector<Scalar>& HurwitzTable::block(const Multidegree& degrees) const {
  auto it = blocks_.find(degrees);
  if (it == blocks_.end()) throw ArgumentError("multidegree outside table bounds");
  return it->second;
}

Scalar& HurwitzTable::at(const Multidegree& degrees, std::size_t mu, std::size_t nu) {
  return block(degrees)[mu * partitions_.size() + nu];
}

const Scalar& HurwitzTable::at(const Multidegree& degrees, std::size_t mu, std::size_t nu) const {
  return block(degrees)[mu * partitions_.size() + nu];
}

const Scalar& HurwitzTable::at(const Multidegree& degrees, const Partition& mu, const Partition& nu) const {
  if (mu.weight() != n() || nu.weight() != n()) throw ArgumentError("partition weight differs from table degree");
  return at(degrees, canonical_index(mu), canonical_index(nu));
}

std::vector<std::string> structure_violations(const HurwitzTable& table) {
  std::vector<std::string> out;
  const auto& parts = table.partitions();
  const Multidegree zero(table.max_degree().size(), 0);
  for (const auto& m : table.multidegrees()) {
    const int total = total_degree(m);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const Scalar& value = table.at(m, i, j);
        std::string where = "(" + parts[i].to_string() + " | " + parts[j].to_string() + ") at total degree " +
                            std::to_string(total);
        if (m == zero) {
          Scalar expected = i == j ? constant_like(Rational(Integer(1), z_mu(parts[i])), value) : zero_like(value);
          if (!(value == expected)) out.push_back("degree-zero block wrong at " + where);
        }
        bool parity_ok = (total + colength(parts[i]) + colength(parts[j])) % 2 == 0;
        if (!parity_ok && !value.is_zero()) out.push_back("parity-forbidden entry nonzero at " + where);
      }
    }
  }
  return out;
}

}  // namespace hurwitz
