#include <doctest.h>

#include <vector>

#include "hurwitz/combinatorial.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/geometric.hpp"
#include "hurwitz/symmetric_group.hpp"

using namespace hurwitz;

namespace {

Species species(Family f, Rational q) { return Species{f, q, ""}; }

TransferMatrix commutator(const TransferMatrix& a, const TransferMatrix& b) {
  auto ab = a * b, ba = b * a;
  TransferMatrix out(a.n(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = ab(i, j) - ba(i, j);
  return out;
}

bool is_zero(const TransferMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Integer multinomial(const Partition& l) {
  Integer out = factorial(l.weight());
  for (int part : l.parts()) out /= factorial(part);
  return out;
}

}  // namespace

TEST_SUITE("combinatorial") {
  TEST_CASE("signatures") {
    std::vector<Transposition> one{{1, 2}};
    CHECK(signature_of(one).signature == Partition{1});
    CHECK(signature_of(one).ordered);
    std::vector<Transposition> unordered{{1, 3}, {2, 3}, {1, 2}};
    CHECK(signature_of(unordered).signature == Partition{2, 1});
    CHECK_FALSE(signature_of(unordered).ordered);
    std::vector<Transposition> ordered{{1, 2}, {1, 3}, {2, 3}};
    CHECK(signature_of(ordered).signature == Partition{2, 1});
    CHECK(signature_of(ordered).ordered);
    // Equal second elements that are not consecutive.
    std::vector<Transposition> split{{1, 3}, {1, 2}, {2, 3}};
    CHECK(signature_of(split).signature == Partition{2, 1});
    CHECK_FALSE(signature_of(split).ordered);
    CHECK(signature_of(std::vector<Transposition>{}).signature == Partition{});
    CHECK(signature_of(std::vector<Transposition>{}).ordered);
  }

  TEST_CASE("path count examples") {
    auto c = path_counts(2, 1, {1, 1}, {2});
    REQUIRE(c.count(Partition{1}) == 1);
    CHECK(c.at(Partition{1}).all == Rational(1, 2));
    CHECK(c.at(Partition{1}).ordered == Rational(1, 2));
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n)) {
          auto empty = path_counts(n, 0, mu, nu);
          Rational expected = mu == nu ? ratio(Integer(1), z_mu(mu)) : Rational(0);
          Rational got = empty.count(Partition{}) ? empty.at(Partition{}).all : Rational(0);
          CHECK(got == expected);
        }
    Rational total = 0;
    for (const auto& [sig, count] : path_counts(3, 2, {1, 1, 1}, {1, 1, 1})) total += count.all;
    CHECK(total == Rational(1, 2));
    CHECK_THROWS_AS(path_counts(kMaxPathDegree + 1, 1, Partition::identity(6), Partition::identity(6)), CapacityError);
    CHECK_THROWS_AS(path_counts(3, kMaxPathLength + 1, {3}, {3}), CapacityError);
  }

  TEST_CASE("multinomial relation between all and ordered counts") {
    for (int n = 2; n <= 4; ++n)
      for (int d = 0; d <= 3; ++d)
        for (const auto& mu : enumerate_partitions(n))
          for (const auto& nu : enumerate_partitions(n))
            for (const auto& [sig, count] : path_counts(n, d, mu, nu))
              CHECK(count.all == count.ordered * Rational(multinomial(sig)));
  }

  TEST_CASE("degree-zero transfer matrix is the identity") {
    for (int n = 1; n <= 5; ++n)
      CHECK(transfer_matrix(species(Family::H, Rational(1, 2)), 0, n) == TransferMatrix::identity(n, Scalar(0)));
  }

  TEST_CASE("S_2 degree-one entry") {
    auto m = transfer_matrix(species(Family::E, Rational(1, 2)), 1, 2);
    // Raw coefficient of C_(2) in E_1 J_2 C_(1,1) is E_1(1/2) = 2.
    CHECK(m.at({1, 1}, {2}).rational() == 2);
    CHECK(m.hurwitz_normalized().at({1, 1}, {2}).rational() == 1);
    CHECK(m.hurwitz_normalized().at({1, 1}, {2}) == quantum_hurwitz(Family::E, Rational(1, 2), 1, {1, 1}, {2}));
  }

  TEST_CASE("group-algebra and spectral transfer matrices agree") {
    for (int n = 1; n <= 5; ++n)
      for (auto f : {Family::E, Family::EPrime, Family::H})
        for (int c = 0; c <= 3; ++c) {
          CAPTURE(n);
          CAPTURE(c);
          auto s = species(f, Rational(1, 3));
          CHECK(transfer_matrix_by_paths(s, c, n) == transfer_matrix(s, c, n));
        }
  }

  TEST_CASE("transfer matrices commute") {
    const std::vector<Species> all{species(Family::E, Rational(1, 2)), species(Family::E, Rational(1, 3)),
                                   species(Family::H, Rational(1, 5))};
    for (int n = 2; n <= 4; ++n)
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
          for (int c = 1; c <= 3; ++c)
            for (int d = 1; d <= 3; ++d)
              CHECK(is_zero(commutator(transfer_matrix(all[a], c, n), transfer_matrix(all[b], d, n))));
  }

  TEST_CASE("transfer matrices vanish off the parity") {
    for (int n = 2; n <= 5; ++n)
      for (int c = 0; c <= 3; ++c) {
        auto m = transfer_matrix(species(Family::H, Rational(1, 3)), c, n);
        for (std::size_t i = 0; i < m.size(); ++i)
          for (std::size_t j = 0; j < m.size(); ++j)
            if ((colength(m.partitions()[i]) + colength(m.partitions()[j]) + c) % 2) CHECK(m(i, j).is_zero());
      }
  }

  TEST_CASE("multispecies products") {
    WeightConfig config{3, {species(Family::E, Rational(1, 2)), species(Family::H, Rational(1, 5))}};
    CHECK(multispecies_transfer(config, {0, 0}) == TransferMatrix::identity(3, Scalar(0)));
    WeightConfig single{3, {species(Family::H, Rational(1, 5))}};
    CHECK(multispecies_transfer(single, {2}) == transfer_matrix(single.species[0], 2, 3));
    auto e = transfer_matrix(config.species[0], 1, 3), h = transfer_matrix(config.species[1], 1, 3);
    CHECK(e * h == h * e);
    CHECK(multispecies_transfer(config, {1, 1}) == e * h);
    CHECK(multispecies_transfer(config, {2, 1}, TransferRoute::Paths) == multispecies_transfer(config, {2, 1}));
  }

  TEST_CASE("path-count formulas match the spectral numbers") {
    for (int n = 1; n <= 4; ++n)
      for (auto f : {Family::E, Family::H})
        for (int d = 0; d <= 3; ++d)
          for (const auto& mu : enumerate_partitions(n))
            for (const auto& nu : enumerate_partitions(n)) {
              auto spectral = combinatorial_hurwitz(f, Rational(1, 2), d, mu, nu);
              CHECK(combinatorial_hurwitz_from_paths(f, Rational(1, 2), d, mu, nu) == spectral);
              CHECK(combinatorial_hurwitz_ordered(f, Rational(1, 2), d, mu, nu) == spectral);
            }
  }

  TEST_CASE("H at degree two in S_3 equals the geometric number") {
    CHECK(combinatorial_hurwitz(Family::H, Rational(1, 3), 2, {3}, {3}) ==
          quantum_hurwitz(Family::H, Rational(1, 3), 2, {3}, {3}));
  }

  TEST_CASE("class structure constants") {
    for (int n = 2; n <= 4; ++n) {
      const auto c = class_structure_constants(n);
      const auto parts = enumerate_partitions(n);
      const std::size_t k = parts.size();
      const std::size_t id = k - 1;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t g = 0; g < k; ++g) {
          // C_id C_a = C_a
          CHECK(c[(id * k + a) * k + g] == (a == g ? 1u : 0u));
          // commutative
          for (std::size_t b = 0; b < k; ++b) CHECK(c[(a * k + b) * k + g] == c[(b * k + a) * k + g]);
        }
      // C_a C_a contains the identity |C_a| times.
      for (std::size_t a = 0; a < k; ++a)
        CHECK(Integer(static_cast<unsigned long>(c[(a * k + a) * k + id])) == factorial(n) / z_mu(parts[a]));
    }
  }

  TEST_CASE("Jucys-Murphy eigenvalues") {
    WeightConfig single{1, {species(Family::E, Rational(1, 2))}};
    CHECK(jm_eigenvalue_check(single, {1}, 3));
    WeightConfig two{2, {species(Family::E, Rational(1, 2))}};
    CHECK(jm_eigenvalue_check(two, {2}, 2));
    CHECK(jm_eigenvalue_check(two, {1, 1}, 2));
    WeightConfig mixed{3, {species(Family::E, Rational(1, 2)), species(Family::H, Rational(1, 5))}};
    for (const auto& l : enumerate_partitions(3)) CHECK(jm_eigenvalue_check(mixed, l, 2));
    WeightConfig wrong{3, {species(Family::E, Rational(1, 2))}};
    CHECK_THROWS_AS(jm_eigenvalue_check(wrong, {2}, 2), ArgumentError);
    WeightConfig big{6, {species(Family::E, Rational(1, 2))}};
    CHECK_THROWS_AS(jm_eigenvalue_check(big, {6}, 1), CapacityError);
  }

  TEST_CASE("symmetric group tables") {
    const auto& g = SymmetricGroup::get(4);
    CHECK(g.order() == 24);
    CHECK(g.class_count() == 5);
    for (SymmetricGroup::Element x = 0; x < g.order(); ++x) {
      CHECK(g.multiply(x, g.inverse(x)) == g.identity());
      CHECK(g.multiply(g.identity(), x) == x);
    }
    auto t = g.transposition(1, 2);
    CHECK(g.class_of(t) == canonical_index({2, 1, 1}));
    CHECK_THROWS_AS(SymmetricGroup::get(kMaxBruteForceDegree + 1), CapacityError);
  }
}
