#include "hurwitz/triangle.hpp"

#include "hurwitz/combinatorial.hpp"
#include "hurwitz/geometric.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

TriangleReport verify_triangle(const WeightConfig& config, const Multidegree& max_degree, int N) {
  TriangleReport report;
  report.n = config.n;
  report.config = config;
  report.max_degree = max_degree;

  const auto route = config.n <= kMaxAlgebraDegree ? TransferRoute::Paths : TransferRoute::Spectral;
  const HurwitzTable geometric = geometric_table(config, max_degree);
  const HurwitzTable combinatorial = combinatorial_table(config, max_degree, route);
  const HurwitzTable tau = tau_coefficients(config, N, max_degree);

  const std::pair<const char*, const HurwitzTable*> named[] = {
      {"geometric", &geometric}, {"combinatorial", &combinatorial}, {"tau", &tau}};
  for (const auto& [name, table] : named)
    for (auto& v : structure_violations(*table)) report.structure_violations.push_back(std::string(name) + ": " + v);

  const auto& parts = tau.partitions();
  for (const auto& m : tau.multidegrees())
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        ++report.entries_checked;
        const Scalar& g = geometric.at(m, i, j);
        const Scalar& c = combinatorial.at(m, i, j);
        const Scalar& t = tau.at(m, i, j);
        if (!(g == t) || !(c == t)) report.discrepancies.push_back({m, parts[i], parts[j], g, c, t});
      }
  return report;
}

}  // namespace hurwitz
