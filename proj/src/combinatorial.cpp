#include "hurwitz/combinatorial.hpp"

#include <algorithm>
#include <functional>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/symmetric_group.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

SignatureInfo signature_of(std::span<const Transposition> steps) {
  std::map<int, int> group_sizes;
  bool ordered = true;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].a < 1 || steps[i].a >= steps[i].b) throw ArgumentError("transpositions need 1 <= a < b");
    ++group_sizes[steps[i].b];
    if (i > 0 && steps[i].b < steps[i - 1].b) ordered = false;
  }
  // Increasing runs of b values make every group consecutive.
  std::vector<int> sizes;
  for (const auto& [b, size] : group_sizes) sizes.push_back(size);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return {Partition(std::move(sizes)), ordered};
}

namespace {

struct RawPathCount {
  std::uint64_t ordered = 0;
  std::uint64_t all = 0;
};

void require_path_limits(int n, int d) {
  if (n < 0 || n > kMaxPathDegree || d < 0 || d > kMaxPathLength)
    throw CapacityError("path_counts supports n <= " + std::to_string(kMaxPathDegree) +
                        ", d <= " + std::to_string(kMaxPathLength));
}

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) out.push_back({a, b});
  return out;
}

}  // namespace

std::map<Partition, PathCount> path_counts(int n, int d, const Partition& mu, const Partition& nu) {
  require_path_limits(n, d);
  if (mu.weight() != n || nu.weight() != n) throw ArgumentError("path_counts: |mu|, |nu| must equal n");
  const auto& group = SymmetricGroup::get(n);
  const auto& starts = group.class_elements(canonical_index(mu));
  const std::size_t target = canonical_index(nu);
  const auto steps = all_transpositions(n);
  std::vector<SymmetricGroup::Element> step_elements;
  for (const auto& t : steps) step_elements.push_back(group.transposition(t.a, t.b));

  // Fixing the first step splits the work; d = 0 is a single empty path.
  const std::size_t tasks = d == 0 ? 1 : steps.size();
  auto partial = parallel_map(tasks, [&](std::size_t first) {
    std::map<Partition, RawPathCount> counts;
    std::vector<Transposition> seq;
    std::function<void(SymmetricGroup::Element)> extend = [&](SymmetricGroup::Element prefix) {
      if (static_cast<int>(seq.size()) == d) {
        std::uint64_t hits = 0;
        for (auto h : starts)
          if (group.class_of(group.multiply(prefix, h)) == target) ++hits;
        if (hits == 0) return;
        auto info = signature_of(seq);
        auto& entry = counts[info.signature];
        entry.all += hits;
        if (info.ordered) entry.ordered += hits;
        return;
      }
      for (std::size_t i = 0; i < steps.size(); ++i) {
        seq.push_back(steps[i]);
        extend(group.multiply(prefix, step_elements[i]));
        seq.pop_back();
      }
    };
    if (d == 0) {
      extend(group.identity());
    } else {
      seq.push_back(steps[first]);
      extend(step_elements[first]);
    }
    return counts;
  });

  std::map<Partition, RawPathCount> merged;
  for (const auto& counts : partial)
    for (const auto& [sig, c] : counts) {
      merged[sig].all += c.all;
      merged[sig].ordered += c.ordered;
    }
  const Integer order = factorial(n);
  std::map<Partition, PathCount> out;
  for (const auto& [sig, c] : merged)
    out.emplace(sig, PathCount{ratio(Integer(static_cast<unsigned long>(c.ordered)), order),
                               ratio(Integer(static_cast<unsigned long>(c.all)), order)});
  return out;
}

TransferMatrix::TransferMatrix(int n, Scalar zero) : n_(n), partitions_(enumerate_partitions(n)) {
  entries_.assign(partitions_.size() * partitions_.size(), zero);
}

TransferMatrix TransferMatrix::identity(int n, const Scalar& like) {
  TransferMatrix out(n, zero_like(like));
  for (std::size_t i = 0; i < out.size(); ++i) out(i, i) = one_like(like);
  return out;
}

const Scalar& TransferMatrix::at(const Partition& mu, const Partition& nu) const {
  if (mu.weight() != n_ || nu.weight() != n_) throw ArgumentError("TransferMatrix::at: weight mismatch");
  return (*this)(canonical_index(mu), canonical_index(nu));
}

TransferMatrix TransferMatrix::hurwitz_normalized() const {
  TransferMatrix out = *this;
  for (std::size_t nu = 0; nu < size(); ++nu) {
    Rational inv(ratio(Integer(1), z_mu(partitions_[nu])));
    for (std::size_t mu = 0; mu < size(); ++mu) out(mu, nu) *= inv;
  }
  return out;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.n_ != b.n_) throw ArgumentError("transfer matrices of different degree");
  TransferMatrix out(a.n_, zero_like(a.entries_.front()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.size(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const TransferMatrix& a, const TransferMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

TransferMatrix transfer_matrix(const Species& species, int c, int n) {
  species.validate();
  if (c < 0) throw ArgumentError("transfer_matrix: negative degree");
  const auto& chars = character_table(n);
  const std::size_t count = chars.size();
  std::vector<Scalar> eigen;
  for (const auto& lambda : chars.partitions()) eigen.push_back(species_content_product(species, lambda, 0, c)[c]);

  TransferMatrix out(n, zero_like(species.parameter));
  auto rows = parallel_map(count, [&](std::size_t mu) {
    std::vector<Scalar> row(count, zero_like(species.parameter));
    Rational inv(ratio(Integer(1), chars.z(mu)));
    for (std::size_t nu = 0; nu < count; ++nu)
      for (std::size_t l = 0; l < count; ++l) {
        const std::int64_t chi = chars(l, mu) * chars(l, nu);
        if (chi != 0) row[nu] += eigen[l] * Rational(Rational(chi) * inv);
      }
    return row;
  });
  for (std::size_t mu = 0; mu < count; ++mu)
    for (std::size_t nu = 0; nu < count; ++nu) out(mu, nu) = rows[mu][nu];
  return out;
}

namespace {

// Element of C[S_n] with coefficients polynomial in the slot variables.
using SlotPolynomial = std::map<Multidegree, Scalar>;
using AlgebraElement = std::vector<SlotPolynomial>;

struct Truncation {
  Multidegree bound;  // per slot
  int max_total;

  bool keeps(const Multidegree& m) const {
    int total = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] > bound[s]) return false;
      total += m[s];
    }
    return total <= max_total;
  }
};

void add_into(SlotPolynomial& target, const SlotPolynomial& source, const Scalar* factor) {
  for (const auto& [m, c] : source) {
    Scalar term = factor ? c * *factor : c;
    auto it = target.find(m);
    if (it == target.end())
      target.emplace(m, std::move(term));
    else
      it->second += term;
  }
}

bool same_polynomial(const SlotPolynomial& a, const SlotPolynomial& b) {
  SlotPolynomial diff = a;
  for (const auto& [m, c] : b) {
    auto it = diff.find(m);
    if (it == diff.end())
      diff.emplace(m, -c);
    else
      it->second -= c;
  }
  return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

// z_slot J_b x: left multiplication by every (a b), a < b, raising slot degree by 1.
AlgebraElement multiply_jm(const SymmetricGroup& group, const AlgebraElement& x, int b, std::size_t slot,
                           const Truncation& trunc) {
  AlgebraElement out(x.size());
  std::vector<SymmetricGroup::Element> left;
  for (int a = 1; a < b; ++a) left.push_back(group.transposition(a, b));
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g].empty()) continue;
    SlotPolynomial shifted;
    for (const auto& [m, c] : x[g]) {
      Multidegree raised = m;
      ++raised[slot];
      if (trunc.keeps(raised)) shifted.emplace(std::move(raised), c);
    }
    if (shifted.empty()) continue;
    for (auto t : left) add_into(out[group.multiply(t, static_cast<SymmetricGroup::Element>(g))], shifted, nullptr);
  }
  return out;
}

// x <- G(z_slot J_b) x = sum_k G_k z_slot^k J_b^k x.
AlgebraElement apply_generating_function(const SymmetricGroup& group, const AlgebraElement& x, int b,
                                         std::size_t slot, const std::vector<Scalar>& coeffs,
                                         const Truncation& trunc) {
  AlgebraElement out(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) add_into(out[g], x[g], &coeffs[0]);
  AlgebraElement power = x;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    power = multiply_jm(group, power, b, slot, trunc);
    bool empty = std::all_of(power.begin(), power.end(), [](const auto& p) { return p.empty(); });
    if (empty) break;
    for (std::size_t g = 0; g < x.size(); ++g) add_into(out[g], power[g], &coeffs[k]);
  }
  return out;
}

// prod_{b=2..n} prod_s G_s(z_s J_b) applied to x.
AlgebraElement apply_central_product(const SymmetricGroup& group, AlgebraElement x,
                                     const std::vector<Species>& species, const Truncation& trunc) {
  std::vector<std::vector<Scalar>> coeffs(species.size());
  for (std::size_t s = 0; s < species.size(); ++s)
    for (int k = 0; k <= trunc.bound[s]; ++k)
      coeffs[s].push_back(weight_coefficient(species[s].family, species[s].parameter, k));
  for (int b = 2; b <= group.degree(); ++b)
    for (std::size_t s = 0; s < species.size(); ++s) x = apply_generating_function(group, x, b, s, coeffs[s], trunc);
  return x;
}

void require_algebra_degree(int n, int limit) {
  if (n < 0 || n > limit)
    throw CapacityError("group-algebra expansion is limited to n <= " + std::to_string(limit));
}

}  // namespace

TransferMatrix transfer_matrix_by_paths(const Species& species, int c, int n) {
  species.validate();
  if (c < 0) throw ArgumentError("transfer_matrix_by_paths: negative degree");
  require_algebra_degree(n, kMaxAlgebraDegree);
  const auto& group = SymmetricGroup::get(n);
  const Truncation trunc{{c}, c};
  const Multidegree top{c};
  const Scalar zero = zero_like(species.parameter);

  TransferMatrix out(n, zero);
  auto rows = parallel_map(group.class_count(), [&](std::size_t mu) {
    AlgebraElement x(group.order());
    for (auto g : group.class_elements(mu)) x[g].emplace(Multidegree{0}, one_like(species.parameter));
    x = apply_central_product(group, std::move(x), {species}, trunc);
    std::vector<Scalar> row;
    for (std::size_t nu = 0; nu < group.class_count(); ++nu) {
      const auto& poly = x[group.class_elements(nu).front()];
      auto it = poly.find(top);
      row.push_back(it == poly.end() ? zero : it->second);
    }
    return row;
  });
  for (std::size_t mu = 0; mu < rows.size(); ++mu)
    for (std::size_t nu = 0; nu < rows.size(); ++nu) out(mu, nu) = rows[mu][nu];
  return out;
}

TransferMatrix multispecies_transfer(const WeightConfig& config, const Multidegree& degrees, TransferRoute route) {
  config.validate();
  if (degrees.size() != config.slots()) throw ArgumentError("multidegree length differs from species count");
  TransferMatrix out = TransferMatrix::identity(config.n, config.one());
  for (std::size_t s = 0; s < config.slots(); ++s) {
    const auto& species = config.species[s];
    out = out * (route == TransferRoute::Spectral ? transfer_matrix(species, degrees[s], config.n)
                                                  : transfer_matrix_by_paths(species, degrees[s], config.n));
  }
  return out;
}

Scalar combinatorial_hurwitz(Family family, const Scalar& q, int d, const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) throw ArgumentError("combinatorial_hurwitz: |mu| != |nu|");
  Species species{family, q, {}};
  return transfer_matrix(species, d, mu.weight()).hurwitz_normalized().at(mu, nu);
}

Scalar combinatorial_hurwitz_from_paths(Family family, const Scalar& q, int d, const Partition& mu,
                                        const Partition& nu) {
  if (mu.weight() != nu.weight()) throw ArgumentError("combinatorial_hurwitz_from_paths: |mu| != |nu|");
  Scalar sum = zero_like(q);
  for (const auto& [sig, count] : path_counts(mu.weight(), d, mu, nu)) {
    Scalar weight = one_like(q);
    for (int part : sig.parts()) weight *= weight_coefficient(family, q, part) * Rational(factorial(part));
    sum += weight * count.all;
  }
  return sum * ratio(Integer(1), factorial(d));
}

Scalar combinatorial_hurwitz_ordered(Family family, const Scalar& q, int d, const Partition& mu,
                                     const Partition& nu) {
  if (mu.weight() != nu.weight()) throw ArgumentError("combinatorial_hurwitz_ordered: |mu| != |nu|");
  Scalar sum = zero_like(q);
  for (const auto& [sig, count] : path_counts(mu.weight(), d, mu, nu)) {
    Scalar weight = one_like(q);
    for (int part : sig.parts()) weight *= weight_coefficient(family, q, part);
    sum += weight * count.ordered;
  }
  return sum;
}

HurwitzTable combinatorial_table(const WeightConfig& config, const Multidegree& max_degree, TransferRoute route) {
  HurwitzTable table(config, max_degree);
  // Per-slot matrices for every degree, reused across multidegrees.
  std::vector<std::vector<TransferMatrix>> per_slot(config.slots());
  for (std::size_t s = 0; s < config.slots(); ++s)
    for (int c = 0; c <= max_degree[s]; ++c)
      per_slot[s].push_back(route == TransferRoute::Spectral
                                ? transfer_matrix(config.species[s], c, config.n)
                                : transfer_matrix_by_paths(config.species[s], c, config.n));
  for (const auto& m : table.multidegrees()) {
    TransferMatrix product = TransferMatrix::identity(config.n, config.one());
    for (std::size_t s = 0; s < m.size(); ++s) product = product * per_slot[s][m[s]];
    auto normalized = product.hurwitz_normalized();
    for (std::size_t mu = 0; mu < normalized.size(); ++mu)
      for (std::size_t nu = 0; nu < normalized.size(); ++nu) table.at(m, mu, nu) = normalized(mu, nu);
  }
  return table;
}

std::vector<std::uint64_t> class_structure_constants(int n) {
  const auto& group = SymmetricGroup::get(n);
  const std::size_t k = group.class_count();
  std::vector<std::uint64_t> pairs(k * k * k, 0);
  for (std::size_t x = 0; x < group.order(); ++x)
    for (std::size_t y = 0; y < group.order(); ++y) {
      auto xy = group.multiply(static_cast<SymmetricGroup::Element>(x), static_cast<SymmetricGroup::Element>(y));
      ++pairs[(group.class_of(static_cast<SymmetricGroup::Element>(x)) * k +
               group.class_of(static_cast<SymmetricGroup::Element>(y))) * k + group.class_of(xy)];
    }
  // Pairs landing anywhere in gamma, divided by |gamma|, count those hitting one element.
  for (std::size_t gamma = 0; gamma < k; ++gamma) {
    const std::uint64_t size = group.class_elements(gamma).size();
    for (std::size_t ab = 0; ab < k * k; ++ab) pairs[ab * k + gamma] /= size;
  }
  return pairs;
}

bool jm_eigenvalue_check(const WeightConfig& config, const Partition& lambda, int max_total) {
  config.validate();
  if (lambda.weight() != config.n) throw ArgumentError("jm_eigenvalue_check: |lambda| != n");
  if (max_total < 0) throw ArgumentError("jm_eigenvalue_check: negative degree");
  require_algebra_degree(config.n, 5);
  const int n = config.n;
  const auto& group = SymmetricGroup::get(n);
  const std::size_t k = group.class_count();
  const Multidegree bound(config.slots(), max_total);
  const Truncation trunc{bound, max_total};

  AlgebraElement x(group.order());
  x[group.identity()].emplace(Multidegree(config.slots(), 0), config.one());
  x = apply_central_product(group, std::move(x), config.species, trunc);

  // The product must be central: constant on conjugacy classes.
  std::vector<SlotPolynomial> by_class(k);
  for (std::size_t alpha = 0; alpha < k; ++alpha) {
    const auto& members = group.class_elements(alpha);
    by_class[alpha] = x[members.front()];
    for (auto g : members)
      if (!same_polynomial(x[g], by_class[alpha])) return false;
  }

  const auto& chars = character_table(n);
  const std::size_t l = canonical_index(lambda);
  std::vector<Rational> idempotent(k);
  for (std::size_t beta = 0; beta < k; ++beta) idempotent[beta] = ratio(Integer(chars(l, beta)), chars.hook(l));

  const auto constants = class_structure_constants(n);
  std::vector<SlotPolynomial> product(k);
  for (std::size_t alpha = 0; alpha < k; ++alpha)
    for (std::size_t beta = 0; beta < k; ++beta) {
      if (idempotent[beta] == 0) continue;
      for (std::size_t gamma = 0; gamma < k; ++gamma) {
        const std::uint64_t c = constants[(alpha * k + beta) * k + gamma];
        if (c == 0) continue;
        Scalar factor = config.one() * Rational(idempotent[beta] * Rational(static_cast<unsigned long>(c)));
        add_into(product[gamma], by_class[alpha], &factor);
      }
    }

  auto eigen = content_product_coeffs(config, lambda, 0, bound);
  for (std::size_t gamma = 0; gamma < k; ++gamma)
    for (const auto& [m, r] : eigen) {
      if (!trunc.keeps(m)) continue;
      Scalar expected = r * idempotent[gamma];
      auto it = product[gamma].find(m);
      Scalar actual = it == product[gamma].end() ? config.zero() : it->second;
      if (!(actual == expected)) return false;
    }
  // No stray monomials outside the content product's support.
  for (std::size_t gamma = 0; gamma < k; ++gamma)
    for (const auto& [m, value] : product[gamma])
      if (!eigen.contains(m) && !value.is_zero()) return false;
  return true;
}

}  // namespace hurwitz
