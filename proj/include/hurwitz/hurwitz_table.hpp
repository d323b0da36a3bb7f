#pragma once

#include <map>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz {

// Coefficients (multidegree, mu, nu) -> value of P_mu(t) P_nu(s) z^degree in
// a generating function, dense over all mu, nu of weight n and every
// multidegree within a rectangular bound. Produced by each of the three
// pipelines and compared entrywise.
class HurwitzTable {
 public:
  HurwitzTable(WeightConfig config, Multidegree max_degree);

  int n() const { return config_.n; }
  const WeightConfig& config() const { return config_; }
  const Multidegree& max_degree() const { return max_degree_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::vector<Multidegree> multidegrees() const { return multidegrees_up_to(max_degree_); }

  Scalar& at(const Multidegree& degrees, std::size_t mu, std::size_t nu);
  const Scalar& at(const Multidegree& degrees, std::size_t mu, std::size_t nu) const;
  const Scalar& at(const Multidegree& degrees, const Partition& mu, const Partition& nu) const;

 private:
  std::vector<Scalar>& block(const Multidegree& degrees);
  const std::vector<Scalar>& block(const Multidegree& degrees) const;

  WeightConfig config_;
  Multidegree max_degree_;
  std::vector<Partition> partitions_;
  std::map<Multidegree, std::vector<Scalar>> blocks_;
};

// Violations of the structural rules every table must satisfy:
//  - the zero-multidegree block is delta_{mu nu} / z_mu;
//  - entries vanish unless (-1)^{total degree} = (-1)^{colength(mu) + colength(nu)}.
std::vector<std::string> structure_violations(const HurwitzTable& table);

}  // namespace hurwitz
