#include <random>

#include "doctest.h"
#include "rookalg/monomial.hpp"

using namespace rookalg;

namespace {
const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();
const FiniteGroupTable* Z2 = &FiniteGroupTable::builtin("Z2");
}  // namespace

TEST_CASE("composition basics") {
  auto s = MonomialMatrix::transposition(1, 2, 2, T);
  CHECK(compose(s, s).isIdentity());

  // eps_1 * (1,2): single entry column 1 -> row 2.
  auto e1 = MonomialMatrix::epsOne(1, 2, T);
  auto p = compose(e1, s);
  CHECK(p.rowOf(1) == 2);
  CHECK_FALSE(p.hasEntry(2));

  auto g = MonomialMatrix::diag(1, 1, 1, Z2);
  CHECK(compose(g, g).isIdentity());

  CHECK_THROWS_AS(compose(MonomialMatrix::identity(2, T), MonomialMatrix::identity(3, T)),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose(MonomialMatrix::identity(2, T), MonomialMatrix::identity(2, Z2)),
                  std::invalid_argument);
}

TEST_CASE("degree counts non-unit diagonal entries") {
  CHECK(MonomialMatrix::identity(5, T).degree() == 0);
  CHECK(MonomialMatrix::transposition(1, 2, 5, T).degree() == 2);
  CHECK(MonomialMatrix::epsOne(1, 3, T).degree() == 1);
  CHECK(MonomialMatrix::diag(1, 2, 3, Z2).degree() == 1);
  CHECK(MonomialMatrix::zero(4, T).degree() == 4);
}

TEST_CASE("truncation strikes trailing rows and columns") {
  CHECK(MonomialMatrix::identity(3, T).truncate(2) == MonomialMatrix::identity(2, T));
  CHECK(MonomialMatrix::transposition(1, 2, 2, T).truncate(1) == MonomialMatrix::zero(1, T));
  CHECK(MonomialMatrix::transposition(1, 3, 3, T).truncate(2) ==
        MonomialMatrix::epsOne(1, 2, T));
}

TEST_CASE("shift prepends a fixed point") {
  CHECK(MonomialMatrix::transposition(1, 2, 2, T).shiftUp() ==
        MonomialMatrix::transposition(2, 3, 3, T));
  CHECK(MonomialMatrix::zero(1, T).shiftUp() == MonomialMatrix::epsOne(2, 2, T));
  CHECK(MonomialMatrix::identity(4, T).shiftUp() == MonomialMatrix::identity(5, T));
}

TEST_CASE("shift and truncation commute") {
  for (const MonomialMatrix& a : enumerateGamma(3, T)) {
    CHECK(a.shiftUp().truncate(3) == a.truncate(2).shiftUp());
  }
}

TEST_CASE("enumeration counts match the closed forms") {
  CHECK(countGamma(2, T) == 7);
  CHECK(countGamma(3, T) == 34);
  CHECK(enumerateGamma(2, T).size() == 7);
  CHECK(enumerateGamma(3, T).size() == 34);
  CHECK(enumerateSym(4, T).size() == 24);
  CHECK(enumerateGn(2, Z2).size() == 8);
  CHECK(enumerateOmega(2, 3, T).size() == 6);
  CHECK(countOmega(2, 3, Z2) == 24);

  auto gamma = enumerateGamma(3, Z2);
  CHECK(gamma.size() == 139);
  CHECK(std::adjacent_find(gamma.begin(), gamma.end()) == gamma.end());  // duplicate-free

  CHECK_THROWS_AS(enumerateSym(9, T), std::invalid_argument);
  CHECK_THROWS_AS(enumerateGn(12, Z2), std::invalid_argument);
}

TEST_CASE("involution is an anti-automorphism") {
  auto gamma = enumerateGamma(3, Z2);
  for (const auto& a : gamma) CHECK(a.star().star() == a);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, gamma.size() - 1);
  for (int t = 0; t < 400; ++t) {
    const auto& a = gamma[pick(rng)];
    const auto& b = gamma[pick(rng)];
    CHECK(compose(a, b).star() == compose(b.star(), a.star()));
  }
}

TEST_CASE("degree is subadditive and monotone under truncation") {
  auto gamma = enumerateGamma(3, T);
  for (const auto& a : gamma)
    for (const auto& b : gamma) CHECK(compose(a, b).degree() <= a.degree() + b.degree());
  std::mt19937 rng(11);
  auto gamma4 = enumerateGamma(4, T);
  std::uniform_int_distribution<size_t> pick(0, gamma4.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& a = gamma4[pick(rng)];
    const auto& b = gamma4[pick(rng)];
    CHECK(compose(a, b).degree() <= a.degree() + b.degree());
    CHECK(a.truncate(3).degree() <= a.degree());
  }
}

TEST_CASE("presentation relations hold as matrix identities") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      auto si = MonomialMatrix::transposition(i, i + 1, n, T);
      auto ei = MonomialMatrix::epsOne(i, n, T);
      auto ei1 = MonomialMatrix::epsOne(i + 1, n, T);
      CHECK(compose(si, ei) == compose(ei1, si));
      CHECK(compose(si, compose(ei, ei1)) == compose(ei, ei1));
    }
  }
}

TEST_CASE("support idempotents") {
  auto e = MonomialMatrix::eps({1, 3}, 4, T);
  CHECK(compose(e, e) == e);
  CHECK(e.star() == e);
  CHECK(e.degree() == 2);
  CHECK_THROWS_AS(MonomialMatrix::eps({5}, 4, T), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(MonomialMatrix::identity(3, T).str() == "1");
  CHECK(MonomialMatrix::epsOne(1, 3, T).str() == "eps{1}");
  CHECK(MonomialMatrix::zero(2, T).str() == "eps{1,2}");
  CHECK(MonomialMatrix::transposition(1, 3, 4, T).str() == "(1,3)");
  // (1,3) with label g2 at column 1 and column 2 killed.
  const FiniteGroupTable* S3 = &FiniteGroupTable::builtin("S3");
  std::vector<int> row = {3, 0, 1};
  std::vector<int> lab = {2, 0, 0};
  CHECK(MonomialMatrix::fromColumnMap(row, lab, S3).str() == "(1,3)[g2@1] eps{2}");
}

TEST_CASE("cycle constructors validate their input") {
  CHECK_THROWS_AS(MonomialMatrix::cycle({1, 1}, 3, T), std::invalid_argument);
  CHECK_THROWS_AS(MonomialMatrix::cycle({1, 5}, 3, T), std::invalid_argument);
  CHECK_THROWS_AS(MonomialMatrix::transposition(2, 2, 3, T), std::invalid_argument);
  CHECK_THROWS_AS(MonomialMatrix::diag(3, 1, 2, Z2), std::invalid_argument);
}

TEST_CASE("cycle type of the permutation part") {
  auto c = MonomialMatrix::cycle({1, 2, 3}, 5, T);
  CHECK(c.permCycleType() == Partition({3, 1, 1}));
  CHECK_THROWS_AS(MonomialMatrix::epsOne(1, 2, T).permCycleType(), std::invalid_argument);
}

TEST_CASE("embedding pads fixed points") {
  auto s = MonomialMatrix::transposition(1, 2, 2, T);
  CHECK(s.embed(4) == MonomialMatrix::transposition(1, 2, 4, T));
  CHECK_THROWS_AS(s.embed(1), std::invalid_argument);
}
