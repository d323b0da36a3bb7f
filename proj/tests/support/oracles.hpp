#pragma once

// Test-side oracles that share no code with the library beyond Rational.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace oracle {

using hurwitz::Rational;

// Number of partitions of n by Euler's pentagonal recurrence.
inline std::vector<std::uint64_t> partition_counts(int up_to) {
  std::vector<std::int64_t> p(up_to + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= up_to; ++n) {
    std::int64_t sum = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sign = k % 2 ? 1 : -1;
      sum += sign * p[n - g1];
      if (g2 <= n) sum += sign * p[n - g2];
    }
    p[n] = sum;
  }
  return {p.begin(), p.end()};
}

// Cycle type of a one-line permutation, parts descending.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int size = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++size;
    }
    parts.push_back(size);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Number of permutations of {0..n-1} of each cycle type.
inline std::map<std::vector<int>, std::uint64_t> class_sizes(int n) {
  std::map<std::vector<int>, std::uint64_t> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++out[cycle_type(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Truncated polynomial in z whose coefficients are polynomials in one or
// more parameters, stored densely as exponent vectors. Parameters share a
// total-degree cap; z has its own cap.
class ProductOracle {
 public:
  using Key = std::vector<int>;  // {z, a_1, ..., a_r}

  ProductOracle(int params, int z_cap, int param_cap) : params_(params), z_cap_(z_cap), param_cap_(param_cap) {
    Key one(params + 1, 0);
    terms_[one] = 1;
  }

  // Multiply by (1 + sign a_param^k z), or by its inverse
  // sum_e (-sign)^e a_param^{k e} z^e.
  void multiply_linear(int param, int k, int sign, bool inverse) {
    std::map<Key, Rational> factor;
    factor[Key(params_ + 1, 0)] = 1;
    const int max_power = inverse ? z_cap_ : 1;
    for (int e = 1; e <= max_power; ++e) {
      Key key(params_ + 1, 0);
      key[0] = e;
      key[1 + param] = k * e;
      int s = inverse ? (e % 2 ? -sign : 1) : sign;
      factor[key] = s;
    }
    std::map<Key, Rational> out;
    for (const auto& [ka, va] : terms_)
      for (const auto& [kb, vb] : factor) {
        Key key(params_ + 1);
        int param_total = 0;
        for (int i = 0; i <= params_; ++i) key[i] = ka[i] + kb[i];
        for (int i = 1; i <= params_; ++i) param_total += key[i];
        if (key[0] > z_cap_ || param_total > param_cap_) continue;
        out[key] += va * vb;
      }
    terms_.clear();
    for (auto& [k, v] : out)
      if (v != 0) terms_.emplace(k, v);
  }

  // Coefficient of z^i as a map from parameter exponents to rationals.
  std::map<std::vector<int>, Rational> z_coefficient(int i) const {
    std::map<std::vector<int>, Rational> out;
    for (const auto& [k, v] : terms_)
      if (k[0] == i) out.emplace(std::vector<int>(k.begin() + 1, k.end()), v);
    return out;
  }

 private:
  int params_;
  int z_cap_;
  int param_cap_;
  std::map<Key, Rational> terms_;
};

// exp of a power series in z with zero constant term, coefficients in any
// ring T supporting +, * and scaling by a Rational: g_0 = 1,
// m g_m = sum_{k=1}^m k f_k g_{m-k}.
template <typename T>
std::vector<T> exp_series(const std::vector<T>& f, const T& one) {
  std::vector<T> g(f.size(), one * Rational(0));
  g[0] = one;
  for (std::size_t m = 1; m < f.size(); ++m) {
    T sum = one * Rational(0);
    for (std::size_t k = 1; k <= m; ++k) sum += f[k] * g[m - k] * Rational(static_cast<long>(k));
    g[m] = sum * Rational(1, static_cast<long>(m));
  }
  return g;
}

}  // namespace oracle
