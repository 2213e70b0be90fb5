#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rookalg/monomial.hpp"

namespace rookalg {

/// A finitely supported rational linear combination of monomial matrices of a
/// common size. Canonical form: no zero coefficients. The zero element keeps
/// its size so mixed-size arithmetic is detected.
class AlgebraElement {
 public:
  AlgebraElement(int n, const FiniteGroupTable* group);  // zero

  static AlgebraElement monomial(const MonomialMatrix& m, const Rat& c = 1);
  static AlgebraElement one(int n, const FiniteGroupTable* group);

  int size() const { return n_; }
  const FiniteGroupTable* group() const { return group_; }
  const std::map<MonomialMatrix, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  long termCount() const { return static_cast<long>(terms_.size()); }
  Rat coeff(const MonomialMatrix& m) const;

  /// Max degree over the support; empty for the zero element.
  std::optional<int> degree() const;

  void add(const MonomialMatrix& m, const Rat& c);  // in-place accumulate

  AlgebraElement operator+(const AlgebraElement&) const;
  AlgebraElement operator-(const AlgebraElement&) const;
  AlgebraElement operator*(const AlgebraElement&) const;
  AlgebraElement scaled(const Rat&) const;
  bool operator==(const AlgebraElement&) const = default;

  AlgebraElement star() const;
  AlgebraElement truncated(int r) const;
  AlgebraElement shifted() const;
  AlgebraElement embedded(int n) const;

  std::string str() const;

 private:
  int n_;
  const FiniteGroupTable* group_;
  std::map<MonomialMatrix, Rat> terms_;

  void checkCompatible(const AlgebraElement& other) const;
};

/// epsbar_i = 1 - eps_i.
AlgebraElement epsBar(int i, int n, const FiniteGroupTable* group);

struct CentralizerSpec {
  enum class Flavor { Group, Semigroup };
  int m = 0;
  Flavor flavor = Flavor::Semigroup;
};

struct CentralizerWitness {
  bool inCentralizer = true;
  std::optional<MonomialMatrix> generator;
  std::optional<AlgebraElement> commutator;
};

/// The finite generating set used for centralizer membership: adjacent
/// transpositions above level m, group diagonals at slot m+1, and (semigroup
/// flavor) the idempotent eps_{m+1}.
std::vector<MonomialMatrix> centralizerGenerators(int n, const CentralizerSpec& spec,
                                                  const FiniteGroupTable* group);

CentralizerWitness isInCentralizer(const AlgebraElement& x, const CentralizerSpec& spec);

/// Exact basis of the centralizer subspace, via conjugation orbits of the
/// unit part plus the idempotent constraint. Requires n <= 5.
std::vector<AlgebraElement> centralizerBasis(int n, const CentralizerSpec& spec,
                                             const FiniteGroupTable* group);

}  // namespace rookalg
