#pragma once

#include <string>
#include <vector>

#include "hurwitz/hurwitz_table.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz {

struct Discrepancy {
  Multidegree degrees;
  Partition mu;
  Partition nu;
  Scalar geometric;
  Scalar combinatorial;
  Scalar tau;
};

struct TriangleReport {
  int n = 0;
  WeightConfig config;
  Multidegree max_degree;
  std::size_t entries_checked = 0;
  std::vector<Discrepancy> discrepancies;
  // structure_violations() of each of the three tables, prefixed by pipeline.
  std::vector<std::string> structure_violations;

  bool ok() const { return discrepancies.empty() && structure_violations.empty(); }
};

// Builds the geometric (character sums with symmetrized weights),
// combinatorial (weighted transposition paths in the group algebra, spectral
// transfer matrices beyond the algebra limit) and tau-coefficient
// (content products, at N) tables and compares them entrywise.
TriangleReport verify_triangle(const WeightConfig& config, const Multidegree& max_degree, int N = 0);

}  // namespace hurwitz
