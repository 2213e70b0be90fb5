#include "doctest.h"
#include "oracles/character_oracle.hpp"
#include "rookalg/induced_char.hpp"
#include "rookalg/multipartition.hpp"
#include "rookalg/partitions.hpp"

using namespace rookalg;

TEST_CASE("partition basics") {
  CHECK(Partition::parse("[3,1,1]").parts() == std::vector<long>{3, 1, 1});
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition({3, 1}).str() == "[3,1]");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({2, 2, 1})));
  CHECK(partitionsOf(6).size() == 11);
  CHECK(partitionsUpTo(4).size() == 12);
}

TEST_CASE("character values") {
  CHECK(charValue(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(charValue(Partition({2, 1}), Partition({3})) == -1);
  for (long n = 1; n <= 6; ++n)
    for (const Partition& rho : partitionsOf(n)) CHECK(charValue(Partition({n}), rho) == 1);
  CHECK_THROWS_AS(charValue(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("characters agree with the permutation-module oracle") {
  for (long n = 1; n <= 5; ++n)
    for (const Partition& la : partitionsOf(n))
      for (const Partition& rho : partitionsOf(n))
        CHECK(Rat(charValue(la, rho)) == testing::characterFromPermutationModules(la, rho));
}

TEST_CASE("dimensions") {
  CHECK(dimPartition(Partition({2, 1})) == 2);
  for (long n = 2; n <= 8; ++n) {
    CHECK(dimPartition(Partition({n})) == 1);
    CHECK(dimPartition(Partition({n - 1, 1})) == n - 1);
  }
  // dim equals the all-ones character value.
  for (const Partition& la : partitionsOf(6))
    CHECK(dimPartition(la) == charValue(la, Partition(std::vector<long>(6, 1))));
}

TEST_CASE("column orthogonality") {
  for (long n = 1; n <= 7; ++n)
    for (const Partition& rho : partitionsOf(n))
      for (const Partition& sigma : partitionsOf(n)) {
        Int sum = 0;
        for (const Partition& la : partitionsOf(n))
          sum += charValue(la, rho) * charValue(la, sigma);
        CHECK(sum == (rho == sigma ? zRho(rho) : Int(0)));
      }
}

TEST_CASE("strips and brackets") {
  auto x3 = stripSetXn(Partition({1}), 3);
  CHECK(x3 == std::vector<Partition>{Partition({2, 1}), Partition({3})});
  CHECK(lambdaBracket(Partition({2, 1}), 8) == Partition({5, 2, 1}));
  CHECK(lambdaBracket(Partition({2, 1}), 4) == Partition({2, 1, 1}));
  CHECK(lambdaBracket(Partition({2, 1}), 3) == Partition({2, 1}));
  CHECK_THROWS_AS(lambdaBracket(Partition({2, 1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(stripSetXn(Partition({2, 1}), 3), std::invalid_argument);

  // X_n(la) = {mu[n] : mu interlaced below la}, containing la[n].
  for (long n = 4; n <= 7; ++n) {
    Partition la({2, 1});
    auto xs = stripSetXn(la, n);
    CHECK(std::binary_search(xs.begin(), xs.end(), lambdaBracket(la, n)));
    for (const Partition& nu : xs) CHECK(interlaces(nu, la));
  }
}

TEST_CASE("branching") {
  auto down = branchDown(Partition({2, 1}));
  CHECK(down == std::vector<Partition>{Partition({1, 1}), Partition({2})});
  CHECK(branchDown(Partition({4})) == std::vector<Partition>{Partition({3})});
  auto up = branchUp(Partition({1}));
  CHECK(up == std::vector<Partition>{Partition({2}), Partition({1, 1})});
  CHECK_THROWS_AS(branchDown(Partition()), std::invalid_argument);

  for (long n = 1; n <= 8; ++n)
    for (const Partition& la : partitionsOf(n)) {
      Int total = 0;
      for (const Partition& mu : branchDown(la)) total += dimPartition(mu);
      CHECK(total == dimPartition(la));
    }
}

TEST_CASE("induced characters from a parabolic") {
  const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();
  std::vector<ParabolicBlock> blocks = {{2, [](const MonomialMatrix&) { return Rat(1); }},
                                        {1, [](const MonomialMatrix&) { return Rat(1); }}};
  CHECK(inducedCharValue(blocks, MonomialMatrix::identity(3, T)) == 3);
  CHECK(inducedCharValue(blocks, MonomialMatrix::transposition(1, 2, 3, T)) == 1);
  CHECK(inducedCharValue(blocks, MonomialMatrix::cycle({1, 2, 3}, 3, T)) == 0);
}

namespace {

MonomialMatrix representative(const Partition& rho, int n, const FiniteGroupTable* g) {
  std::vector<int> row(n);
  int pos = 1;
  for (long part : rho.parts()) {
    for (int t = 0; t < part; ++t) row[pos - 1 + t] = pos + ((t + 1) % part);
    pos += static_cast<int>(part);
  }
  for (; pos <= n; ++pos) row[pos - 1] = pos;
  return MonomialMatrix::fromColumnMap(row, std::vector<int>(n, 0), g);
}

}  // namespace

TEST_CASE("Pieri consistency for induced characters") {
  const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();
  for (long ell = 1; ell <= 3; ++ell)
    for (const Partition& la : partitionsOf(ell))
      for (long n = ell + 1; n <= 6; ++n) {
        std::vector<ParabolicBlock> blocks = {
            {static_cast<int>(ell),
             [&la](const MonomialMatrix& x) {
               return Rat(charValue(la, x.permCycleType()));
             }},
            {static_cast<int>(n - ell), [](const MonomialMatrix&) { return Rat(1); }}};
        auto xs = stripSetXn(la, n);
        for (const Partition& rho : partitionsOf(n)) {
          Rat lhs = inducedCharValue(blocks, representative(rho, static_cast<int>(n), T));
          Rat rhs = 0;
          for (const Partition& nu : xs) rhs += Rat(charValue(nu, rho));
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("multipartitions") {
  const FiniteGroupTable* Z2 = &FiniteGroupTable::builtin("Z2");
  Multipartition m = Multipartition::parse("{\"0\":[2,1],\"1\":[1]}", Z2);
  CHECK(m.norm() == 4);
  CHECK(m.at(0) == Partition({2, 1}));
  CHECK(m.support() == std::vector<int>{0, 1});
  CHECK(Multipartition::parse(m.str(), Z2) == m);
  CHECK_THROWS_AS(Multipartition::parse("{\"7\":[1]}", Z2), std::invalid_argument);

  CHECK(wreathDim(Multipartition(Z2, {Partition({1}), Partition({1})})) == 2);
  CHECK(wreathDim(Multipartition(Z2, {Partition(), Partition({2})})) == 1);
  CHECK(wreathDim(Multipartition(Z2, {Partition({3}), Partition()})) == 1);

  CHECK(multipartitionsOf(2, Z2).size() == 5);
  CHECK(mpBracket(m, 7).at(0) == Partition({3, 2, 1}));
  CHECK(mpBracket(m, 7).at(1) == Partition({1}));
  CHECK(mpBranchDown(m).size() == 3);
  CHECK(mpStripSetXn(m, 6).size() == stripSetXn(Partition({2, 1}), 5).size());
}

TEST_CASE("dimension ratio of the bracket family") {
  // For la = (1) the ratio is exactly (n-1)/n.
  for (long n = 4; n <= 30; ++n) {
    Rat ratio = Rat(dimPartition(lambdaBracket(Partition({1}), n))) /
                Rat(binomialInt(n, 1) * dimPartition(Partition({1})));
    Rat want(n - 1, n);
    want.canonicalize();
    CHECK(ratio == want);
  }
}
