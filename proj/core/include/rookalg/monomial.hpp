#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rookalg/group_table.hpp"
#include "rookalg/partitions.hpp"

namespace rookalg {

/// An element of Gamma(n,G): a partial injection on columns {1..n} with a
/// group label on each matched position. Stored column-keyed: rowOf(j) is the
/// unique row of the nonzero entry in column j (or 0 for an empty column).
/// Immutable after construction.
class MonomialMatrix {
 public:
  MonomialMatrix(int n, const FiniteGroupTable* group);  // all-zero matrix

  static MonomialMatrix identity(int n, const FiniteGroupTable* group);
  static MonomialMatrix zero(int n, const FiniteGroupTable* group);
  static MonomialMatrix eps(const std::vector<int>& killed, int n, const FiniteGroupTable* group);
  static MonomialMatrix epsOne(int i, int n, const FiniteGroupTable* group);
  static MonomialMatrix transposition(int a, int b, int n, const FiniteGroupTable* group);
  /// Cycle i1 -> i2 -> ... -> ik -> i1 (indices 1-based, pairwise distinct).
  static MonomialMatrix cycle(const std::vector<int>& idx, int n, const FiniteGroupTable* group);
  /// Diagonal matrix with label g at slot i.
  static MonomialMatrix diag(int g, int i, int n, const FiniteGroupTable* group);
  static MonomialMatrix fromColumnMap(const std::vector<int>& rowOf, const std::vector<int>& labelOf,
                                      const FiniteGroupTable* group);

  int size() const { return n_; }
  const FiniteGroupTable* group() const { return group_; }

  bool hasEntry(int col) const { return row_[col - 1] != 0; }  // 1-based
  int rowOf(int col) const { return row_[col - 1]; }           // 0 if empty
  int labelOf(int col) const { return lab_[col - 1]; }

  /// Number of diagonal entries distinct from 1 (empty diagonal counts).
  int degree() const;

  int supportSize() const;
  bool isPermutation() const;   // full support, all labels trivial
  bool isGroupElement() const;  // full support
  bool isIdentity() const;

  /// The involution: transpose with inverted labels.
  MonomialMatrix star() const;

  MonomialMatrix truncate(int r) const;
  /// The shift: prepend a fixed point and relabel i -> i+1.
  MonomialMatrix shiftUp() const;
  /// Canonical embedding into size n (append fixed points).
  MonomialMatrix embed(int n) const;

  /// Cycle type of the permutation part; requires isPermutation().
  Partition permCycleType() const;

  auto operator<=>(const MonomialMatrix& other) const = default;

  /// Canonical text: cycles of the extended permutation part, group labels
  /// as [g<idx>@<col>], and the killed set as eps{...}; "1" for the identity.
  std::string str() const;

 private:
  int n_;
  const FiniteGroupTable* group_;
  std::vector<int> row_;  // 0 = empty column, else 1-based row
  std::vector<int> lab_;  // group element index per column (0 where empty)
};

/// Matrix product a*b (labels multiply along matched positions).
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);

/// An ell x n matrix with exactly one entry per row, at most one per column:
/// row q holds label lab[q] in column col[q].
struct OmegaMatrix {
  int ell = 0, n = 0;
  std::vector<int> col;  // 1-based, pairwise distinct
  std::vector<int> lab;
  auto operator<=>(const OmegaMatrix&) const = default;
};

std::vector<MonomialMatrix> enumerateSym(int n, const FiniteGroupTable* group);
std::vector<MonomialMatrix> enumerateGn(int n, const FiniteGroupTable* group);
std::vector<MonomialMatrix> enumerateGamma(int n, const FiniteGroupTable* group);
std::vector<OmegaMatrix> enumerateOmega(int ell, int n, const FiniteGroupTable* group);

Int countSym(int n);
Int countGn(int n, const FiniteGroupTable* group);
Int countGamma(int n, const FiniteGroupTable* group);
Int countOmega(int ell, int n, const FiniteGroupTable* group);

}  // namespace rookalg
