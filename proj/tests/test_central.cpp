#include "doctest.h"
#include "rookalg/central_elements.hpp"
#include "rookalg/reps.hpp"

using namespace rookalg;

namespace {
const FiniteGroupTable* T = &FiniteGroupTable::trivialGroup();
const FiniteGroupTable* Z2 = &FiniteGroupTable::builtin("Z2");
const FiniteGroupTable* S3 = &FiniteGroupTable::builtin("S3");
}  // namespace

TEST_CASE("cycle sums") {
  CHECK(cycleSum(1, 4, T) == AlgebraElement::one(4, T).scaled(4));
  AlgebraElement want(3, T);
  want.add(MonomialMatrix::transposition(1, 2, 3, T), 2);
  want.add(MonomialMatrix::transposition(1, 3, 3, T), 2);
  want.add(MonomialMatrix::transposition(2, 3, 3, T), 2);
  CHECK(cycleSum(2, 3, T) == want);
  CHECK(cycleSum(3, 2, T).isZero());
}

TEST_CASE("wreath cycle sums") {
  AlgebraElement sign(1, Z2);
  sign.add(MonomialMatrix::identity(1, Z2), Rat(1) / 2);
  sign.add(MonomialMatrix::diag(1, 1, 1, Z2), Rat(-1) / 2);
  CHECK(cycleSumWreath(1, 1, 1, Z2) == sign);

  AlgebraElement triv(1, Z2);
  triv.add(MonomialMatrix::identity(1, Z2), Rat(1) / 2);
  triv.add(MonomialMatrix::diag(1, 1, 1, Z2), Rat(1) / 2);
  CHECK(cycleSumWreath(1, 0, 1, Z2) == triv);

  // Over the trivial group the weighted sum degenerates to the plain one.
  for (long k = 1; k <= 3; ++k) {
    AlgebraElement plain = cycleSum(k, 3, T);
    AlgebraElement wreathed = cycleSumWreath(k, 0, 3, T);
    CHECK(plain == wreathed);
  }
  CHECK_THROWS_AS(cycleSumWreath(1, 5, 2, Z2), std::invalid_argument);
}

TEST_CASE("presence-damped cycle sums") {
  AlgebraElement d13 = rookCycleSum(1, 3, T);
  AlgebraElement want = AlgebraElement::one(3, T).scaled(3);
  for (int i = 1; i <= 3; ++i) want.add(MonomialMatrix::epsOne(i, 3, T), -1);
  CHECK(d13 == want);

  AlgebraElement d22 = rookCycleSum(2, 2, T);
  CHECK(d22.coeff(MonomialMatrix::transposition(1, 2, 2, T)) == 2);
  CHECK(d22.coeff(compose(MonomialMatrix::transposition(1, 2, 2, T),
                          MonomialMatrix::epsOne(1, 2, T))) == -2);
  CHECK(d22.coeff(compose(MonomialMatrix::transposition(1, 2, 2, T),
                          MonomialMatrix::epsOne(2, 2, T))) == -2);
  CHECK(d22.coeff(MonomialMatrix::zero(2, T)) == 2);
  CHECK(d22.termCount() == 4);

  CHECK(rookCycleSum(3, 2, T).isZero());
}

TEST_CASE("Jucys-Murphy elements") {
  AlgebraElement u12 = jucysMurphy(1, 2, T);
  AlgebraElement want =
      AlgebraElement::monomial(MonomialMatrix::transposition(1, 2, 2, T)) * epsBar(1, 2, T) *
      epsBar(2, 2, T);
  CHECK(u12 == want);
  CHECK(jucysMurphy(2, 2, T).isZero());

  AlgebraElement uz = jucysMurphy(1, 2, Z2);
  AlgebraElement wz(2, Z2);
  for (int g = 0; g < 2; ++g) {
    auto d = compose(MonomialMatrix::diag(g, 1, 2, Z2), MonomialMatrix::diag(g, 2, 2, Z2));
    wz = wz + AlgebraElement::monomial(compose(d, MonomialMatrix::transposition(1, 2, 2, Z2))) *
                  epsBar(1, 2, Z2) * epsBar(2, 2, Z2);
  }
  CHECK(uz == wz);
}

TEST_CASE("central lifts") {
  CHECK(liftToCenter(ShiftedFunction::psharp(Partition({2})), 3, T) == cycleSum(2, 3, T));
  for (int n = 2; n <= 4; ++n) {
    CHECK(liftToCenter(ShiftedFunction::q(1), n, T) == AlgebraElement::one(n, T).scaled(n));
    CHECK(liftToCenter(ShiftedFunction::hstar(1), n, T) ==
          AlgebraElement::one(n, T).scaled(2 * n));
  }
}

TEST_CASE("central approximations match the scalar combination") {
  for (int n = 3; n <= 5; ++n) {
    AlgebraElement a1 = hstarCentralApprox(1, n);
    for (const Partition& la : partitionsUpTo(1)) {
      if (n < la.size() + la.part(1) + 1) continue;
      Partition lan = lambdaBracket(la, n);
      Rat got = centralEigenvalue(RepModel(std::in_place_type<SymRep>, lan), a1);
      CHECK(got == hstarApprox(1, la, n));
    }
  }
  // k=1, la empty: the eigenvalue on the trivial shape vanishes exactly.
  for (int n = 2; n <= 6; ++n) {
    Rat got = centralEigenvalue(RepModel(std::in_place_type<SymRep>, Partition({n})),
                                hstarCentralApprox(1, n));
    CHECK(got == 0);
  }
}

TEST_CASE("degrees of the distinguished families") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(cycleSum(1, n, T).degree() == 0);
    for (long k = 2; k <= n; ++k) CHECK(cycleSum(k, n, T).degree() == k);
  }
  for (int psi = 0; psi < 2; ++psi) CHECK(cycleSumWreath(1, psi, 3, Z2).degree() == 1);
  for (int psi = 0; psi < 3; ++psi) CHECK(cycleSumWreath(1, psi, 3, S3).degree() == 1);
  for (long k = 1; k <= 2; ++k) {
    auto a = hstarCentralApprox(k, 5);
    CHECK(a.degree().value_or(0) <= 2 * k);
  }
}

TEST_CASE("centrality of every builder") {
  CentralizerSpec center{0, CentralizerSpec::Flavor::Semigroup};
  CentralizerSpec gcenter{0, CentralizerSpec::Flavor::Group};
  for (int n = 2; n <= 5; ++n)
    for (long k = 1; k <= n; ++k) {
      CHECK(isInCentralizer(cycleSum(k, n, T), gcenter).inCentralizer);
      CHECK(isInCentralizer(rookCycleSum(k, n, T), center).inCentralizer);
    }
  for (int n = 2; n <= 4; ++n) CHECK(isInCentralizer(hstarCentralApprox(1, n), gcenter).inCentralizer);
  for (const FiniteGroupTable* g : {Z2, S3})
    for (int n = 2; n <= 3; ++n)
      for (long k = 1; k <= n; ++k)
        for (int psi = 0; psi < g->numChars(); ++psi) {
          CHECK(isInCentralizer(cycleSumWreath(k, psi, n, g), gcenter).inCentralizer);
          CHECK(isInCentralizer(rookCycleSumPhi(k, n, g, classFunctionForPsi(k, psi, g)),
                                center)
                    .inCentralizer);
        }
}

TEST_CASE("truncation consistency and the shift identity") {
  for (int n = 2; n <= 6; ++n) {
    for (long k = 1; k <= n; ++k)
      CHECK(rookCycleSum(k, n, T).truncated(n - 1) == rookCycleSum(k, n - 1, T));
    for (int i = 1; i < n; ++i)
      CHECK(jucysMurphy(i, n, T).truncated(n - 1) == jucysMurphy(i, n - 1, T));
    CHECK(rookCycleSum(2, n, T) - rookCycleSum(2, n - 1, T).shifted() ==
          jucysMurphy(1, n, T).scaled(2));
  }
  auto phi1 = identityIndicator(Z2);
  for (int n = 2; n <= 4; ++n) {
    for (long k = 1; k <= n; ++k)
      CHECK(rookCycleSumPhi(k, n, Z2, phi1).truncated(n - 1) ==
            rookCycleSumPhi(k, n - 1, Z2, phi1));
    CHECK(rookCycleSumPhi(2, n, Z2, phi1) - rookCycleSumPhi(2, n - 1, Z2, phi1).shifted() ==
          jucysMurphy(1, n, Z2).scaled(2));
  }
}
