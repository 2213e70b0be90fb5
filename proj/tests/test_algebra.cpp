#include <random>

#include "doctest.h"
#include "rookalg/algebra.hpp"
#include "rookalg/central_elements.hpp"

using namespace rookalg;

namespace {
const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();
const FiniteGroupTable* Z2 = &FiniteGroupTable::builtin("Z2");

AlgebraElement randomElement(const std::vector<MonomialMatrix>& basis, std::mt19937& rng,
                             int terms) {
  AlgebraElement x(basis.front().size(), basis.front().group());
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int t = 0; t < terms; ++t) x.add(basis[pick(rng)], coeff(rng));
  return x;
}
}  // namespace

TEST_CASE("products and idempotents") {
  auto eb1 = epsBar(1, 2, T);
  CHECK(eb1 * eb1 == eb1);

  // z^(1)_n x = n x.
  auto z1 = cycleSum(1, 3, T);
  std::mt19937 rng(3);
  auto basis = enumerateGamma(3, T);
  for (int t = 0; t < 10; ++t) {
    auto x = randomElement(basis, rng, 4);
    CHECK(z1 * x == x.scaled(3));
  }

  // ((1,2)+(2,3))^2 = 2e + (1,2,3) + (1,3,2).
  AlgebraElement s(3, T);
  s.add(MonomialMatrix::transposition(1, 2, 3, T), 1);
  s.add(MonomialMatrix::transposition(2, 3, 3, T), 1);
  AlgebraElement want = AlgebraElement::one(3, T).scaled(2);
  want.add(MonomialMatrix::cycle({1, 2, 3}, 3, T), 1);
  want.add(MonomialMatrix::cycle({1, 3, 2}, 3, T), 1);
  CHECK(s * s == want);
}

TEST_CASE("mixed sizes and groups are detected") {
  AlgebraElement zero2(2, T), zero3(3, T), zeroZ(2, Z2);
  CHECK_THROWS_AS(zero2 + zero3, std::invalid_argument);
  CHECK_THROWS_AS(zero2 * zeroZ, std::invalid_argument);
  CHECK(zero2.isZero());
  CHECK(zero2.truncated(1).size() == 1);
  CHECK_FALSE(zero2.degree().has_value());
}

TEST_CASE("linear truncation merges collapsed keys") {
  auto z23 = cycleSum(2, 3, T);
  AlgebraElement want(2, T);
  want.add(MonomialMatrix::transposition(1, 2, 2, T), 2);
  want.add(MonomialMatrix::epsOne(1, 2, T), 2);
  want.add(MonomialMatrix::epsOne(2, 2, T), 2);
  CHECK(z23.truncated(2) == want);
}

TEST_CASE("degree filtration") {
  std::mt19937 rng(5);
  auto basis = enumerateGamma(4, T);
  for (int t = 0; t < 60; ++t) {
    auto x = randomElement(basis, rng, 5);
    auto y = randomElement(basis, rng, 5);
    auto sum = x + y;
    auto prod = x * y;
    if (!sum.isZero() && !x.isZero() && !y.isZero())
      CHECK(*sum.degree() <= std::max(*x.degree(), *y.degree()));
    if (!prod.isZero() && !x.isZero() && !y.isZero())
      CHECK(*prod.degree() <= *x.degree() + *y.degree());
  }
}

TEST_CASE("star is an anti-homomorphism") {
  std::mt19937 rng(9);
  auto basis = enumerateGamma(3, Z2);
  for (int t = 0; t < 40; ++t) {
    auto x = randomElement(basis, rng, 4);
    auto y = randomElement(basis, rng, 4);
    CHECK((x * y).star() == y.star() * x.star());
    CHECK(x.star().star() == x);
  }
}

TEST_CASE("centralizer membership with witnesses") {
  CHECK(isInCentralizer(cycleSum(2, 3, T), {0, CentralizerSpec::Flavor::Group}).inCentralizer);
  CHECK(isInCentralizer(jucysMurphy(1, 3, T), {1, CentralizerSpec::Flavor::Semigroup})
            .inCentralizer);

  auto e1 = AlgebraElement::monomial(MonomialMatrix::epsOne(1, 2, T));
  auto w = isInCentralizer(e1, {0, CentralizerSpec::Flavor::Semigroup});
  CHECK_FALSE(w.inCentralizer);
  CHECK(*w.generator == MonomialMatrix::transposition(1, 2, 2, T));
  CHECK_FALSE(w.commutator->isZero());
}

TEST_CASE("centralizer basis dimensions") {
  CHECK(centralizerBasis(2, {0, CentralizerSpec::Flavor::Semigroup}, T).size() == 4);
  CHECK(centralizerBasis(3, {0, CentralizerSpec::Flavor::Group}, T).size() == 3);
  CHECK(centralizerBasis(1, {0, CentralizerSpec::Flavor::Semigroup}, T).size() == 2);
  for (int n = 1; n <= 4; ++n) {
    size_t want = partitionsUpTo(n).size();
    CHECK(centralizerBasis(n, {0, CentralizerSpec::Flavor::Semigroup}, T).size() == want);
  }
  CHECK_THROWS_AS(centralizerBasis(6, {0, CentralizerSpec::Flavor::Semigroup}, T),
                  std::invalid_argument);
}

TEST_CASE("centralizer basis elements commute with the whole subsemigroup") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 0; m <= n; ++m) {
      CentralizerSpec spec{m, CentralizerSpec::Flavor::Semigroup};
      for (const AlgebraElement& b : centralizerBasis(n, spec, T)) {
        // brute force against every element of Gamma_m(n)
        for (const MonomialMatrix& inner : enumerateGamma(n - m, T)) {
          AlgebraElement g(n, T);
          MonomialMatrix shifted = inner;
          for (int s = 0; s < m; ++s) shifted = shifted.shiftUp();
          g.add(shifted, 1);
          CHECK(b * g == g * b);
        }
      }
    }
  }
}

TEST_CASE("generating-set membership agrees with brute force") {
  std::mt19937 rng(13);
  for (int n = 2; n <= 3; ++n) {
    auto basis = enumerateGamma(n, T);
    for (int m = 0; m < n; ++m) {
      CentralizerSpec spec{m, CentralizerSpec::Flavor::Semigroup};
      for (int t = 0; t < 25; ++t) {
        auto x = randomElement(basis, rng, 4);
        bool brute = true;
        for (const MonomialMatrix& inner : enumerateGamma(n - m, T)) {
          MonomialMatrix shifted = inner;
          for (int s = 0; s < m; ++s) shifted = shifted.shiftUp();
          AlgebraElement g = AlgebraElement::monomial(shifted);
          if (!(x * g == g * x)) {
            brute = false;
            break;
          }
        }
        CHECK(isInCentralizer(x, spec).inCentralizer == brute);
      }
    }
  }
}

TEST_CASE("linear truncation is an algebra morphism on the top centralizer") {
  CentralizerSpec spec{3, CentralizerSpec::Flavor::Semigroup};
  auto basis = centralizerBasis(4, spec, T);
  REQUIRE(!basis.empty());
  for (size_t a = 0; a < basis.size(); a += 3)
    for (size_t b = 0; b < basis.size(); b += 3)
      CHECK((basis[a] * basis[b]).truncated(3) ==
            basis[a].truncated(3) * basis[b].truncated(3));
}

TEST_CASE("truncation preserves centralizer levels") {
  for (int n = 3; n <= 4; ++n)
    for (int m = 0; m < n; ++m) {
      CentralizerSpec spec{m, CentralizerSpec::Flavor::Semigroup};
      for (const AlgebraElement& b : centralizerBasis(n, spec, T))
        CHECK(isInCentralizer(b.truncated(n - 1), spec).inCentralizer);
    }
}

TEST_CASE("canonical text output") {
  AlgebraElement x(3, T);
  x.add(MonomialMatrix::transposition(1, 3, 3, T), Rat(3) / 2);
  x.add(MonomialMatrix::epsOne(2, 3, T), -1);
  CHECK(x.str() == "-eps{2} + 3/2 * (1,3)");
  CHECK(AlgebraElement(2, T).str() == "0");
  CHECK(AlgebraElement::one(2, T).str() == "1");
}
