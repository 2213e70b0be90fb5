#include "rookalg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rookalg {

MonomialMatrix::MonomialMatrix(int n, const FiniteGroupTable* group)
    : n_(n), group_(group), row_(n, 0), lab_(n, 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
  if (!group) throw std::invalid_argument("null group");
}

MonomialMatrix MonomialMatrix::identity(int n, const FiniteGroupTable* group) {
  MonomialMatrix m(n, group);
  for (int j = 1; j <= n; ++j) m.row_[j - 1] = j;
  return m;
}

MonomialMatrix MonomialMatrix::zero(int n, const FiniteGroupTable* group) {
  return MonomialMatrix(n, group);
}

MonomialMatrix MonomialMatrix::eps(const std::vector<int>& killed, int n,
                                   const FiniteGroupTable* group) {
  MonomialMatrix m = identity(n, group);
  for (int i : killed) {
    if (i < 1 || i > n) throw std::invalid_argument("eps index out of range");
    m.row_[i - 1] = 0;
    m.lab_[i - 1] = 0;
  }
  return m;
}

MonomialMatrix MonomialMatrix::epsOne(int i, int n, const FiniteGroupTable* group) {
  return eps({i}, n, group);
}

MonomialMatrix MonomialMatrix::transposition(int a, int b, int n, const FiniteGroupTable* group) {
  if (a == b) throw std::invalid_argument("transposition needs distinct points");
  return cycle({a, b}, n, group);
}

MonomialMatrix MonomialMatrix::cycle(const std::vector<int>& idx, int n,
                                     const FiniteGroupTable* group) {
  std::vector<int> seen(n + 1, 0);
  for (int i : idx) {
    if (i < 1 || i > n) throw std::invalid_argument("cycle index out of range");
    if (seen[i]++) throw std::invalid_argument("cycle indices must be pairwise distinct");
  }
  MonomialMatrix m = identity(n, group);
  for (size_t t = 0; t < idx.size(); ++t)
    m.row_[idx[t] - 1] = idx[(t + 1) % idx.size()];
  return m;
}

MonomialMatrix MonomialMatrix::diag(int g, int i, int n, const FiniteGroupTable* group) {
  if (g < 0 || g >= group->order) throw std::invalid_argument("group label out of range");
  MonomialMatrix m = identity(n, group);
  if (i < 1 || i > n) throw std::invalid_argument("diag slot out of range");
  m.lab_[i - 1] = g;
  return m;
}

MonomialMatrix MonomialMatrix::fromColumnMap(const std::vector<int>& rowOf,
                                             const std::vector<int>& labelOf,
                                             const FiniteGroupTable* group) {
  int n = static_cast<int>(rowOf.size());
  MonomialMatrix m(n, group);
  std::vector<int> seen(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    int r = rowOf[j];
    if (r < 0 || r > n) throw std::invalid_argument("row index out of range");
    if (r != 0 && seen[r]++) throw std::invalid_argument("duplicate row in column map");
    m.row_[j] = r;
    int l = r == 0 ? 0 : labelOf[j];
    if (l < 0 || l >= group->order) throw std::invalid_argument("group label out of range");
    m.lab_[j] = l;
  }
  return m;
}

int MonomialMatrix::degree() const {
  int fixed = 0;
  for (int j = 0; j < n_; ++j)
    if (row_[j] == j + 1 && lab_[j] == 0) ++fixed;
  return n_ - fixed;
}

int MonomialMatrix::supportSize() const {
  int s = 0;
  for (int j = 0; j < n_; ++j)
    if (row_[j]) ++s;
  return s;
}

bool MonomialMatrix::isPermutation() const {
  for (int j = 0; j < n_; ++j)
    if (!row_[j] || lab_[j]) return false;
  return true;
}

bool MonomialMatrix::isGroupElement() const {
  for (int j = 0; j < n_; ++j)
    if (!row_[j]) return false;
  return true;
}

bool MonomialMatrix::isIdentity() const {
  for (int j = 0; j < n_; ++j)
    if (row_[j] != j + 1 || lab_[j] != 0) return false;
  return true;
}

MonomialMatrix MonomialMatrix::star() const {
  MonomialMatrix m(n_, group_);
  for (int j = 0; j < n_; ++j) {
    if (!row_[j]) continue;
    m.row_[row_[j] - 1] = j + 1;
    m.lab_[row_[j] - 1] = group_->inv[lab_[j]];
  }
  return m;
}

MonomialMatrix MonomialMatrix::truncate(int r) const {
  if (r < 0 || r > n_) throw std::invalid_argument("truncate size out of range");
  MonomialMatrix m(r, group_);
  for (int j = 0; j < r; ++j) {
    if (row_[j] && row_[j] <= r) {
      m.row_[j] = row_[j];
      m.lab_[j] = lab_[j];
    }
  }
  return m;
}

MonomialMatrix MonomialMatrix::shiftUp() const {
  MonomialMatrix m(n_ + 1, group_);
  m.row_[0] = 1;
  for (int j = 0; j < n_; ++j) {
    if (row_[j]) {
      m.row_[j + 1] = row_[j] + 1;
      m.lab_[j + 1] = lab_[j];
    }
  }
  return m;
}

MonomialMatrix MonomialMatrix::embed(int n) const {
  if (n < n_) throw std::invalid_argument("embed target smaller than source");
  MonomialMatrix m(n, group_);
  for (int j = 0; j < n_; ++j) {
    m.row_[j] = row_[j];
    m.lab_[j] = lab_[j];
  }
  for (int j = n_; j < n; ++j) m.row_[j] = j + 1;
  return m;
}

Partition MonomialMatrix::permCycleType() const {
  if (!isPermutation()) throw std::invalid_argument("cycle type of a non-permutation");
  std::vector<bool> seen(n_, false);
  std::vector<long> lens;
  for (int j = 0; j < n_; ++j) {
    if (seen[j]) continue;
    long len = 0;
    int c = j;
    while (!seen[c]) {
      seen[c] = true;
      ++len;
      c = row_[c] - 1;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<long>());
  return Partition(lens);
}

std::string MonomialMatrix::str() const {
  // Extend the partial injection to a full permutation: unmatched columns map
  // to unmatched rows in sorted order.
  std::vector<int> perm(n_, 0);
  std::vector<bool> rowUsed(n_ + 1, false);
  std::vector<int> freeCols;
  for (int j = 0; j < n_; ++j) {
    if (row_[j]) {
      perm[j] = row_[j];
      rowUsed[row_[j]] = true;
    } else {
      freeCols.push_back(j);
    }
  }
  std::vector<int> freeRows;
  for (int r = 1; r <= n_; ++r)
    if (!rowUsed[r]) freeRows.push_back(r);
  for (size_t t = 0; t < freeCols.size(); ++t) perm[freeCols[t]] = freeRows[t];

  std::ostringstream out;
  bool wrote = false;
  std::vector<bool> seen(n_, false);
  for (int j = 0; j < n_; ++j) {
    if (seen[j] || perm[j] == j + 1) {
      seen[j] = true;
      continue;
    }
    std::vector<int> cyc;
    int c = j;
    while (!seen[c]) {
      seen[c] = true;
      cyc.push_back(c + 1);
      c = perm[c] - 1;
    }
    if (wrote) out << " ";
    out << "(";
    for (size_t t = 0; t < cyc.size(); ++t) {
      if (t) out << ",";
      out << cyc[t];
    }
    out << ")";
    wrote = true;
  }
  std::ostringstream labels;
  for (int j = 0; j < n_; ++j)
    if (row_[j] && lab_[j]) labels << "[g" << lab_[j] << "@" << (j + 1) << "]";
  if (!labels.str().empty()) {
    out << labels.str();
    wrote = true;
  }
  if (!freeCols.empty()) {
    if (wrote) out << " ";
    out << "eps{";
    for (size_t t = 0; t < freeCols.size(); ++t) {
      if (t) out << ",";
      out << (freeCols[t] + 1);
    }
    out << "}";
    wrote = true;
  }
  if (!wrote) return "1";
  return out.str();
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  if (a.group() != b.group()) throw std::invalid_argument("compose: group mismatch");
  const FiniteGroupTable* G = a.group();
  int n = a.size();
  std::vector<int> row(n, 0), lab(n, 0);
  for (int j = 1; j <= n; ++j) {
    if (!b.hasEntry(j)) continue;
    int mid = b.rowOf(j);
    if (!a.hasEntry(mid)) continue;
    row[j - 1] = a.rowOf(mid);
    lab[j - 1] = G->mult[a.labelOf(mid)][b.labelOf(j)];
  }
  return MonomialMatrix::fromColumnMap(row, lab, G);
}

namespace {

constexpr long kEnumBound = 1000000;

void checkGammaBound(int n, const FiniteGroupTable* g) {
  if (g->trivial() ? n > 8 : countGamma(n, g) > kEnumBound)
    throw std::invalid_argument("enumeration bound exceeded for Gamma(" + std::to_string(n) +
                                "," + g->name + ")");
}

}  // namespace

std::vector<MonomialMatrix> enumerateSym(int n, const FiniteGroupTable* group) {
  if (n > 8) throw std::invalid_argument("enumeration bound exceeded for S(n), n > 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<MonomialMatrix> out;
  std::vector<int> labs(n, 0);
  do {
    out.push_back(MonomialMatrix::fromColumnMap(perm, labs, group));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialMatrix> enumerateGn(int n, const FiniteGroupTable* group) {
  if (countGn(n, group) > kEnumBound)
    throw std::invalid_argument("enumeration bound exceeded for G(n)");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<MonomialMatrix> out;
  do {
    std::vector<int> labs(n, 0);
    while (true) {
      out.push_back(MonomialMatrix::fromColumnMap(perm, labs, group));
      int j = 0;
      while (j < n && labs[j] == group->order - 1) labs[j++] = 0;
      if (j == n) break;
      ++labs[j];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialMatrix> enumerateGamma(int n, const FiniteGroupTable* group) {
  checkGammaBound(n, group);
  std::vector<MonomialMatrix> out;
  std::vector<int> row(n, 0), lab(n, 0);
  auto rec = [&](auto&& self, int col, std::vector<bool>& rowUsed) -> void {
    if (col == n) {
      out.push_back(MonomialMatrix::fromColumnMap(row, lab, group));
      return;
    }
    row[col] = 0;
    lab[col] = 0;
    self(self, col + 1, rowUsed);
    for (int r = 1; r <= n; ++r) {
      if (rowUsed[r]) continue;
      rowUsed[r] = true;
      row[col] = r;
      for (int g = 0; g < group->order; ++g) {
        lab[col] = g;
        self(self, col + 1, rowUsed);
      }
      rowUsed[r] = false;
      row[col] = 0;
      lab[col] = 0;
    }
  };
  std::vector<bool> rowUsed(n + 1, false);
  rec(rec, 0, rowUsed);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OmegaMatrix> enumerateOmega(int ell, int n, const FiniteGroupTable* group) {
  if (ell > n) throw std::invalid_argument("Omega requires ell <= n");
  if (countOmega(ell, n, group) > kEnumBound)
    throw std::invalid_argument("enumeration bound exceeded for Omega");
  std::vector<OmegaMatrix> out;
  OmegaMatrix w;
  w.ell = ell;
  w.n = n;
  w.col.assign(ell, 0);
  w.lab.assign(ell, 0);
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int q) -> void {
    if (q == ell) {
      out.push_back(w);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      w.col[q] = c;
      for (int g = 0; g < group->order; ++g) {
        w.lab[q] = g;
        self(self, q + 1);
      }
      used[c] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Int countSym(int n) { return factorialInt(n); }

Int countGn(int n, const FiniteGroupTable* group) {
  Int c = factorialInt(n);
  for (int i = 0; i < n; ++i) c *= group->order;
  return c;
}

Int countGamma(int n, const FiniteGroupTable* group) {
  Int total = 0;
  for (int l = 0; l <= n; ++l) {
    Int term = binomialInt(n, l) * binomialInt(n, l) * factorialInt(l);
    for (int i = 0; i < l; ++i) term *= group->order;
    total += term;
  }
  return total;
}

Int countOmega(int ell, int n, const FiniteGroupTable* group) {
  Int c = fallingInt(n, ell);
  for (int i = 0; i < ell; ++i) c *= group->order;
  return c;
}

}  // namespace rookalg
