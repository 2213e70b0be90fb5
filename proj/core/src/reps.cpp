#include "rookalg/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rookalg/induced_char.hpp"

namespace rookalg {

namespace {

struct TableauSet {
  std::vector<std::vector<int>> rowOf, colOf;  // per tableau, per value (0-based)
};

TableauSet standardTableaux(const Partition& la) {
  TableauSet out;
  long n = la.size();
  std::vector<int> fill(la.rows(), 0);
  std::vector<int> rowOf(n), colOf(n);
  auto rec = [&](auto&& self, long v) -> void {
    if (v == n) {
      out.rowOf.push_back(rowOf);
      out.colOf.push_back(colOf);
      return;
    }
    for (long r = 0; r < la.rows(); ++r) {
      if (fill[r] >= la.part(r + 1)) continue;
      if (r > 0 && fill[r] >= fill[r - 1]) continue;
      rowOf[v] = static_cast<int>(r);
      colOf[v] = fill[r];
      ++fill[r];
      self(self, v + 1);
      --fill[r];
    }
  };
  rec(rec, 0);
  return out;
}

/// Adjacent-word factorization: returns w with perm = s_{w[m-1]} ... s_{w[0]}.
std::vector<int> adjacentWord(const MonomialMatrix& perm) {
  int n = perm.size();
  std::vector<int> vals(n);
  for (int j = 1; j <= n; ++j) vals[j - 1] = perm.rowOf(j);
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (vals[i] > vals[i + 1]) {
        std::swap(vals[i], vals[i + 1]);
        word.push_back(i + 1);
        changed = true;
      }
    }
  }
  return word;
}

long tensorPow(long base, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

RatMat kron(const RatMat& a, const RatMat& b) {
  RatMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (long p = 0; p < b.rows(); ++p)
        for (long q = 0; q < b.cols(); ++q)
          if (b.at(p, q) != 0) r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

std::vector<std::vector<int>> subsetsOf(int n, long ell) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<long>(cur.size()) == ell) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c <= n; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

SymRep::SymRep(Partition la) : la_(std::move(la)), n_(static_cast<int>(la_.size())) {
  TableauSet t = standardTableaux(la_);
  rowOf_ = std::move(t.rowOf);
  colOf_ = std::move(t.colOf);
  dim_ = static_cast<long>(rowOf_.size());
  if (dim_ != dimPartition(la_).get_si()) throw std::logic_error("tableau count mismatch");

  std::map<std::vector<int>, int> index;
  for (long t2 = 0; t2 < dim_; ++t2) index.emplace(rowOf_[t2], static_cast<int>(t2));

  adjacent_.reserve(std::max(0, n_ - 1));
  for (int i = 1; i <= n_ - 1; ++i) {
    RatMat m(dim_, dim_);
    for (long t2 = 0; t2 < dim_; ++t2) {
      long r1 = rowOf_[t2][i - 1], c1 = colOf_[t2][i - 1];
      long r2 = rowOf_[t2][i], c2 = colOf_[t2][i];
      long axial = (c2 - r2) - (c1 - r1);
      Rat inv(1, axial);
      inv.canonicalize();
      m.at(t2, t2) = inv;
      if (axial == 1 || axial == -1) continue;  // same row/column: diagonal action
      std::vector<int> swapped = rowOf_[t2];
      std::swap(swapped[i - 1], swapped[i]);
      long other = index.at(swapped);
      m.at(other, t2) = axial > 0 ? Rat(1) : Rat(1) - inv * inv;
    }
    adjacent_.push_back(std::move(m));
  }

  // All transposition images (a,b) = s_{b-1} (a,b-1) s_{b-1}.
  transpositions_.assign(static_cast<size_t>(n_) * n_, RatMat());
  auto slot = [this](int a, int b) { return static_cast<size_t>(a - 1) * n_ + (b - 1); };
  for (int d = 1; d < n_; ++d)
    for (int a = 1; a + d <= n_; ++a) {
      int b = a + d;
      if (d == 1)
        transpositions_[slot(a, b)] = adjacent_[a - 1];
      else
        transpositions_[slot(a, b)] =
            adjacent_[b - 2] * transpositions_[slot(a, b - 1)] * adjacent_[b - 2];
    }
}

const RatMat& SymRep::adjacentImage(int i) const {
  if (i < 1 || i > n_ - 1) throw std::invalid_argument("adjacent transposition out of range");
  return adjacent_[i - 1];
}

const RatMat& SymRep::transpositionImage(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n_ || a == b) throw std::invalid_argument("transposition out of range");
  return transpositions_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
}

RatMat SymRep::image(const MonomialMatrix& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  if (!perm.isPermutation()) throw std::invalid_argument("seminormal model needs a permutation");
  std::vector<int> word = adjacentWord(perm);
  RatMat m = RatMat::identity(dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * adjacent_[*it - 1];
  return m;
}

SymRepF::SymRepF(Partition la) : la_(std::move(la)), n_(static_cast<int>(la_.size())) {
  TableauSet t = standardTableaux(la_);
  dim_ = static_cast<long>(t.rowOf.size());
  std::map<std::vector<int>, int> index;
  for (long t2 = 0; t2 < dim_; ++t2) index.emplace(t.rowOf[t2], static_cast<int>(t2));
  for (int i = 1; i <= n_ - 1; ++i) {
    FloatMat m(dim_, dim_);
    for (long t2 = 0; t2 < dim_; ++t2) {
      long r1 = t.rowOf[t2][i - 1], c1 = t.colOf[t2][i - 1];
      long r2 = t.rowOf[t2][i], c2 = t.colOf[t2][i];
      long axial = (c2 - r2) - (c1 - r1);
      double inv = 1.0 / static_cast<double>(axial);
      m.at(t2, t2) = inv;
      if (axial == 1 || axial == -1) continue;
      std::vector<int> swapped = t.rowOf[t2];
      std::swap(swapped[i - 1], swapped[i]);
      long other = index.at(swapped);
      m.at(other, t2) = std::sqrt(1.0 - inv * inv);
    }
    adjacent_.push_back(std::move(m));
  }
}

const FloatMat& SymRepF::adjacentImage(int i) const {
  if (i < 1 || i > n_ - 1) throw std::invalid_argument("adjacent transposition out of range");
  return adjacent_[i - 1];
}

FloatMat SymRepF::image(const MonomialMatrix& perm) const {
  if (!perm.isPermutation()) throw std::invalid_argument("orthogonal model needs a permutation");
  std::vector<int> word = adjacentWord(perm);
  FloatMat m = FloatMat::identity(dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * adjacent_[*it - 1];
  return m;
}

WreathRep::WreathRep(Multipartition bla) : bla_(std::move(bla)) {
  n_ = static_cast<int>(bla_.norm());
  if (n_ < 1) throw std::invalid_argument("wreath model needs a nonempty multipartition");
  std::vector<int> supp = bla_.support();
  if (supp.size() == 1) {
    single_ = true;
    phi_ = supp[0];
    inner_ = std::make_shared<SymRep>(bla_.at(phi_));
    long dphi = bla_.group()->dims[phi_];
    dim_ = inner_->dim() * tensorPow(dphi, n_);
  } else {
    single_ = false;
    supportPsis_ = supp;
    int offset = 0;
    innerDim_ = 1;
    for (int psi : supp) {
      int sz = static_cast<int>(bla_.at(psi).size());
      blockSizes_.push_back(sz);
      blockOffsets_.push_back(offset);
      offset += sz;
      Multipartition part(bla_.group());
      part = part.withSlot(psi, bla_.at(psi));
      factors_.push_back(std::make_shared<WreathRep>(std::move(part)));
      innerDim_ *= factors_.back()->dim();
    }
    // All assignments of slots to blocks with the right fiber sizes.
    std::vector<int> cur(n_, -1);
    std::vector<int> remaining = blockSizes_;
    auto rec = [&](auto&& self, int slot) -> void {
      if (slot == n_) {
        assignments_.push_back(cur);
        return;
      }
      for (size_t b = 0; b < blockSizes_.size(); ++b) {
        if (!remaining[b]) continue;
        --remaining[b];
        cur[slot] = static_cast<int>(b);
        self(self, slot + 1);
        cur[slot] = -1;
        ++remaining[b];
      }
    };
    rec(rec, 0);
    std::sort(assignments_.begin(), assignments_.end());
    for (size_t i = 0; i < assignments_.size(); ++i)
      assignmentIndex_.emplace(assignments_[i], static_cast<int>(i));
    dim_ = static_cast<long>(assignments_.size()) * innerDim_;
  }
  if (Int(dim_) != wreathDim(bla_)) throw std::logic_error("wreath dimension mismatch");
}

RatMat WreathRep::imageSingle(const MonomialMatrix& x) const {
  const FiniteGroupTable* G = bla_.group();
  long dphi = G->dims[phi_];
  long tens = tensorPow(dphi, n_);
  const std::vector<RatMat>& tau = G->models()[phi_];

  // Split x = diag(labels by row) * permutation part.
  std::vector<int> permRow(n_), labelByRow(n_, 0), colOfRow(n_, 0);
  for (int j = 1; j <= n_; ++j) {
    int r = x.rowOf(j);
    permRow[j - 1] = r;
    labelByRow[r - 1] = x.labelOf(j);
    colOfRow[r - 1] = j;
  }
  std::vector<int> trivialLabels(n_, 0);
  RatMat p = inner_->image(MonomialMatrix::fromColumnMap(permRow, trivialLabels, G));

  RatMat m(dim_, dim_);
  std::vector<long> inIdx(n_), outIdx(n_);
  for (long jin = 0; jin < tens; ++jin) {
    long rest = jin;
    for (int i = n_ - 1; i >= 0; --i) {
      inIdx[i] = rest % dphi;
      rest /= dphi;
    }
    for (long jout = 0; jout < tens; ++jout) {
      long rest2 = jout;
      for (int i = n_ - 1; i >= 0; --i) {
        outIdx[i] = rest2 % dphi;
        rest2 /= dphi;
      }
      Rat w = 1;
      for (int i = 1; i <= n_ && w != 0; ++i)
        w *= tau[labelByRow[i - 1]].at(outIdx[i - 1], inIdx[colOfRow[i - 1] - 1]);
      if (w == 0) continue;
      for (long t = 0; t < inner_->dim(); ++t)
        for (long t2 = 0; t2 < inner_->dim(); ++t2) {
          const Rat& pv = p.at(t2, t);
          if (pv == 0) continue;
          m.at(t2 * tens + jout, t * tens + jin) += pv * w;
        }
    }
  }
  return m;
}

RatMat WreathRep::imageInduced(const MonomialMatrix& x) const {
  const FiniteGroupTable* G = bla_.group();
  RatMat m(dim_, dim_);
  for (size_t aIdx = 0; aIdx < assignments_.size(); ++aIdx) {
    const std::vector<int>& a = assignments_[aIdx];
    // Representative w_a: column j -> its rank inside block a(j).
    std::vector<int> fill(blockSizes_.size(), 0);
    std::vector<int> row(n_), lab(n_, 0);
    for (int j = 0; j < n_; ++j) row[j] = blockOffsets_[a[j]] + (++fill[a[j]]);
    MonomialMatrix wa = MonomialMatrix::fromColumnMap(row, lab, G);

    // Target assignment and parabolic part h.
    std::vector<int> aPrime(n_);
    for (int j = 1; j <= n_; ++j) aPrime[j - 1] = a[x.rowOf(j) - 1];
    auto it = assignmentIndex_.find(aPrime);
    if (it == assignmentIndex_.end()) throw std::logic_error("induced coset resolution failed");
    std::vector<int> row2(n_), lab2(n_, 0), fill2(blockSizes_.size(), 0);
    for (int j = 0; j < n_; ++j) row2[j] = blockOffsets_[aPrime[j]] + (++fill2[aPrime[j]]);
    MonomialMatrix waPrime = MonomialMatrix::fromColumnMap(row2, lab2, G);

    MonomialMatrix h = compose(compose(wa, x), waPrime.star());
    RatMat rho = RatMat::identity(1);
    for (size_t b = 0; b < blockSizes_.size(); ++b) {
      std::vector<int> blockIdx;
      for (int t = 1; t <= blockSizes_[b]; ++t) blockIdx.push_back(blockOffsets_[b] + t);
      rho = kron(rho, factors_[b]->image(subMonomial(h, blockIdx)));
    }
    long rowOff = static_cast<long>(aIdx) * innerDim_;
    long colOff = static_cast<long>(it->second) * innerDim_;
    for (long i = 0; i < innerDim_; ++i)
      for (long j = 0; j < innerDim_; ++j)
        if (rho.at(i, j) != 0) m.at(rowOff + i, colOff + j) = rho.at(i, j);
  }
  return m;
}

RatMat WreathRep::image(const MonomialMatrix& x) const {
  if (x.size() != n_) throw std::invalid_argument("wreath image size mismatch");
  if (!x.isGroupElement()) throw std::invalid_argument("wreath model needs an invertible element");
  return single_ ? imageSingle(x) : imageInduced(x);
}

RookRep::RookRep(Partition la, int n, const FiniteGroupTable* group)
    : n_(n), ell_(la.size()), group_(group) {
  if (!group->trivial()) throw std::invalid_argument("partition-indexed rook model needs the trivial group");
  if (ell_ > n_) throw std::invalid_argument("rook model requires |lambda| <= n");
  if (ell_ > 0) {
    symInner_.emplace(std::move(la));
    innerDim_ = symInner_->dim();
  }
  initSupports();
}

RookRep::RookRep(Multipartition bla, int n) : n_(n), ell_(bla.norm()), group_(bla.group()) {
  if (ell_ > n_) throw std::invalid_argument("rook model requires ||bla|| <= n");
  if (ell_ > 0) {
    if (group_->trivial()) {
      symInner_.emplace(bla.at(0));
    } else {
      wreathInner_.emplace(std::move(bla));
    }
    innerDim_ = symInner_ ? symInner_->dim() : wreathInner_->dim();
  }
  initSupports();
}

void RookRep::initSupports() {
  supports_ = subsetsOf(n_, ell_);
  for (size_t i = 0; i < supports_.size(); ++i)
    supportIndex_.emplace(supports_[i], static_cast<int>(i));
  dim_ = static_cast<long>(supports_.size()) * innerDim_;
}

RookRep::Resolved RookRep::resolve(int supportIdx, const MonomialMatrix& gamma) const {
  Resolved res;
  const std::vector<int>& b = supports_[supportIdx];
  // Row-indexed view of gamma.
  std::vector<int> colOfRow(n_ + 1, 0), labOfRow(n_ + 1, 0);
  for (int j = 1; j <= n_; ++j) {
    if (gamma.hasEntry(j)) {
      colOfRow[gamma.rowOf(j)] = j;
      labOfRow[gamma.rowOf(j)] = gamma.labelOf(j);
    }
  }
  std::vector<std::pair<int, std::pair<int, int>>> entries;  // (newCol, (q, label))
  for (long q = 0; q < ell_; ++q) {
    int r = b[q];
    if (!colOfRow[r]) return res;  // a row dies
    entries.push_back({colOfRow[r], {static_cast<int>(q), labOfRow[r]}});
  }
  std::sort(entries.begin(), entries.end());
  std::vector<int> newSupport(ell_), row(ell_), lab(ell_);
  for (long p = 0; p < ell_; ++p) {
    newSupport[p] = entries[p].first;
    row[p] = entries[p].second.first + 1;
    lab[p] = entries[p].second.second;
  }
  res.dead = false;
  res.target = supportIndex_.at(newSupport);
  res.u = MonomialMatrix::fromColumnMap(row, lab, group_);
  return res;
}

RatMat RookRep::innerImage(const MonomialMatrix& u) const {
  if (ell_ == 0) return RatMat::identity(1);
  return symInner_ ? symInner_->image(u) : wreathInner_->image(u);
}

RatMat RookRep::image(const MonomialMatrix& gamma) const {
  if (gamma.size() != n_) throw std::invalid_argument("rook image size mismatch");
  RatMat m(dim_, dim_);
  for (size_t bIdx = 0; bIdx < supports_.size(); ++bIdx) {
    Resolved r = resolve(static_cast<int>(bIdx), gamma);
    if (r.dead) continue;
    RatMat block = innerImage(r.u);
    long rowOff = static_cast<long>(bIdx) * innerDim_;
    long colOff = static_cast<long>(r.target) * innerDim_;
    for (long i = 0; i < innerDim_; ++i)
      for (long j = 0; j < innerDim_; ++j)
        if (block.at(i, j) != 0) m.at(rowOff + i, colOff + j) = block.at(i, j);
  }
  return m;
}

RookBlockSums rookSymbolicApply(int n, long ell, const FiniteGroupTable* group,
                                const AlgebraElement& x) {
  if (x.size() != n || x.group() != group)
    throw std::invalid_argument("rook apply size/group mismatch");
  RookBlockSums out;
  out.n = n;
  out.ell = ell;
  out.group = group;
  std::vector<std::vector<int>> supports = subsetsOf(n, ell);
  std::map<std::vector<int>, int> supportIndex;
  std::vector<uint64_t> supportMask(supports.size(), 0);
  for (size_t i = 0; i < supports.size(); ++i) {
    supportIndex.emplace(supports[i], static_cast<int>(i));
    for (int r : supports[i]) supportMask[i] |= 1ULL << r;
  }

  std::vector<int> colOfRow(n + 1), labOfRow(n + 1);
  std::vector<std::pair<int, std::pair<int, int>>> entries;
  std::vector<int> newSupport(ell), row(ell), lab(ell);
  for (const auto& [gamma, c] : x.terms()) {
    std::fill(colOfRow.begin(), colOfRow.end(), 0);
    uint64_t presentRows = 0;
    for (int j = 1; j <= n; ++j) {
      if (gamma.hasEntry(j)) {
        colOfRow[gamma.rowOf(j)] = j;
        labOfRow[gamma.rowOf(j)] = gamma.labelOf(j);
        presentRows |= 1ULL << gamma.rowOf(j);
      }
    }
    for (size_t bIdx = 0; bIdx < supports.size(); ++bIdx) {
      if (supportMask[bIdx] & ~presentRows) continue;  // a row dies
      const std::vector<int>& b = supports[bIdx];
      entries.clear();
      for (long q = 0; q < ell; ++q) {
        int r = b[q];
        entries.push_back({colOfRow[r], {static_cast<int>(q), labOfRow[r]}});
      }
      std::sort(entries.begin(), entries.end());
      for (long p = 0; p < ell; ++p) {
        newSupport[p] = entries[p].first;
        row[p] = entries[p].second.first + 1;
        lab[p] = entries[p].second.second;
      }
      int target = supportIndex.at(newSupport);
      auto& cell = out.blocks[{static_cast<int>(bIdx), target}];
      MonomialMatrix u = MonomialMatrix::fromColumnMap(row, lab, group);
      auto [it, inserted] = cell.emplace(std::move(u), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) cell.erase(it);
      }
    }
  }
  return out;
}

RatMat evaluateBlockSums(const RookRep& rep, const RookBlockSums& sums) {
  if (sums.n != rep.points() || sums.ell != rep.ell() || sums.group != rep.group())
    throw std::invalid_argument("block sums incompatible with the model");
  long innerDim = rep.innerDim();
  std::map<std::map<MonomialMatrix, Rat>, RatMat> memo;
  RatMat m(rep.dim(), rep.dim());
  for (const auto& [pos, cell] : sums.blocks) {
    if (cell.empty()) continue;
    auto it = memo.find(cell);
    if (it == memo.end()) {
      RatMat sum(innerDim, innerDim);
      for (const auto& [u, c] : cell) sum.addScaled(rep.innerImage(u), c);
      it = memo.emplace(cell, std::move(sum)).first;
    }
    long rowOff = static_cast<long>(pos.first) * innerDim;
    long colOff = static_cast<long>(pos.second) * innerDim;
    for (long i = 0; i < innerDim; ++i)
      for (long j = 0; j < innerDim; ++j) {
        const Rat& v = it->second.at(i, j);
        if (v != 0) m.at(rowOff + i, colOff + j) += v;
      }
  }
  return m;
}

RatMat RookRep::apply(const AlgebraElement& x) const {
  return evaluateBlockSums(*this, rookSymbolicApply(n_, ell_, group_, x));
}

Rat RookRep::traceOf(const MonomialMatrix& gamma) const {
  Rat t = 0;
  for (size_t bIdx = 0; bIdx < supports_.size(); ++bIdx) {
    Resolved r = resolve(static_cast<int>(bIdx), gamma);
    if (r.dead || r.target != static_cast<int>(bIdx)) continue;
    t += innerImage(r.u).trace();
  }
  return t;
}

RatMat RookRep::compression(int r) const {
  RatMat m(dim_, dim_);
  for (size_t bIdx = 0; bIdx < supports_.size(); ++bIdx) {
    if (!supports_[bIdx].empty() && supports_[bIdx].back() > r) continue;
    long off = static_cast<long>(bIdx) * innerDim_;
    for (long i = 0; i < innerDim_; ++i) m.at(off + i, off + i) = 1;
  }
  return m;
}

RookRepF::RookRepF(Partition la, int n, const FiniteGroupTable* group)
    : n_(n), ell_(la.size()), group_(group) {
  if (!group->trivial())
    throw std::invalid_argument("float rook model supports the trivial group only");
  if (ell_ > n_) throw std::invalid_argument("rook model requires |lambda| <= n");
  if (ell_ > 0) {
    inner_.emplace(std::move(la));
    innerDim_ = inner_->dim();
  }
  supports_ = subsetsOf(n_, ell_);
  for (size_t i = 0; i < supports_.size(); ++i)
    supportIndex_.emplace(supports_[i], static_cast<int>(i));
  dim_ = static_cast<long>(supports_.size()) * innerDim_;
}

int RookRepF::supportIndexOf(const std::vector<int>& s) const {
  auto it = supportIndex_.find(s);
  return it == supportIndex_.end() ? -1 : it->second;
}

FloatMat RookRepF::image(const MonomialMatrix& gamma) const {
  FloatMat m(dim_, dim_);
  for (size_t bIdx = 0; bIdx < supports_.size(); ++bIdx) {
    const std::vector<int>& b = supports_[bIdx];
    std::vector<int> colOfRow(n_ + 1, 0);
    for (int j = 1; j <= n_; ++j)
      if (gamma.hasEntry(j)) colOfRow[gamma.rowOf(j)] = j;
    std::vector<std::pair<int, int>> entries;
    bool dead = false;
    for (long q = 0; q < ell_; ++q) {
      int r = b[q];
      if (!colOfRow[r]) {
        dead = true;
        break;
      }
      entries.push_back({colOfRow[r], static_cast<int>(q)});
    }
    if (dead) continue;
    std::sort(entries.begin(), entries.end());
    std::vector<int> newSupport(ell_), row(ell_), lab(ell_, 0);
    for (long p = 0; p < ell_; ++p) {
      newSupport[p] = entries[p].first;
      row[p] = entries[p].second + 1;
    }
    FloatMat block = ell_ ? inner_->image(MonomialMatrix::fromColumnMap(
                                row, lab, &FiniteGroupTable::trivialGroup()))
                          : FloatMat::identity(1);
    long rowOff = static_cast<long>(bIdx) * innerDim_;
    long colOff = static_cast<long>(supportIndex_.at(newSupport)) * innerDim_;
    for (long i = 0; i < innerDim_; ++i)
      for (long j = 0; j < innerDim_; ++j) m.at(rowOff + i, colOff + j) = block.at(i, j);
  }
  return m;
}

FloatMat RookRepF::apply(const AlgebraElement& x) const {
  FloatMat m(dim_, dim_);
  for (const auto& [gamma, c] : x.terms()) m.addScaled(image(gamma), c.get_d());
  return m;
}

FloatMat RookRepF::compression(int r) const {
  FloatMat m(dim_, dim_);
  for (size_t bIdx = 0; bIdx < supports_.size(); ++bIdx) {
    if (!supports_[bIdx].empty() && supports_[bIdx].back() > r) continue;
    long off = static_cast<long>(bIdx) * innerDim_;
    for (long i = 0; i < innerDim_; ++i) m.at(off + i, off + i) = 1.0;
  }
  return m;
}

long repDim(const RepModel& rep) {
  return std::visit([](const auto& r) { return r.dim(); }, rep);
}

RatMat applyAlgebra(const RepModel& rep, const AlgebraElement& x) {
  if (std::holds_alternative<SymRep>(rep)) {
    const SymRep& r = std::get<SymRep>(rep);
    RatMat m(r.dim(), r.dim());
    for (const auto& [mono, c] : x.terms()) m.addScaled(r.image(mono), c);
    return m;
  }
  if (std::holds_alternative<WreathRep>(rep)) {
    const WreathRep& r = std::get<WreathRep>(rep);
    RatMat m(r.dim(), r.dim());
    for (const auto& [mono, c] : x.terms()) m.addScaled(r.image(mono), c);
    return m;
  }
  if (std::holds_alternative<RookRep>(rep)) return std::get<RookRep>(rep).apply(x);
  throw std::invalid_argument("applyAlgebra: float model passed to the exact path");
}

FloatMat applyAlgebraF(const RepModel& rep, const AlgebraElement& x) {
  if (std::holds_alternative<SymRepF>(rep)) {
    const SymRepF& r = std::get<SymRepF>(rep);
    FloatMat m(r.dim(), r.dim());
    for (const auto& [mono, c] : x.terms()) m.addScaled(r.image(mono), c.get_d());
    return m;
  }
  if (std::holds_alternative<RookRepF>(rep)) return std::get<RookRepF>(rep).apply(x);
  throw std::invalid_argument("applyAlgebraF: exact model passed to the float path");
}

Rat centralEigenvalue(const RepModel& rep, const AlgebraElement& x) {
  RatMat m = applyAlgebra(rep, x);
  Rat value;
  if (!m.isScalar(&value))
    throw NonScalarError("element does not act as a scalar (not central, or model reducible)");
  return value;
}

std::vector<RatMat> cycleSumImages(const SymRep& rep) {
  int n = rep.points();
  long dim = rep.dim();
  // tails[mask][posOf(c)] = sum over tuples with index set mask starting at c
  // of the image of (c,d1)(d1,d2)... ; masks are bitsets over 0..n-1.
  std::vector<std::vector<RatMat>> tails(1L << n);
  std::vector<int> bits;
  for (long mask = 1; mask < (1L << n); ++mask) {
    bits.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) bits.push_back(i);
    tails[mask].assign(bits.size(), RatMat());
    for (size_t ci = 0; ci < bits.size(); ++ci) {
      int c = bits[ci];
      if (bits.size() == 1) {
        tails[mask][ci] = RatMat::identity(dim);
        continue;
      }
      RatMat sum(dim, dim);
      long rest = mask & ~(1L << c);
      std::vector<int> restBits;
      for (int i = 0; i < n; ++i)
        if (rest & (1L << i)) restBits.push_back(i);
      for (size_t di = 0; di < restBits.size(); ++di) {
        int d = restBits[di];
        sum = sum + rep.transpositionImage(c + 1, d + 1) * tails[rest][di];
      }
      tails[mask][ci] = std::move(sum);
    }
  }
  std::vector<RatMat> out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = RatMat(dim, dim);
  out[0] = RatMat::identity(dim).scaled(n);
  for (long mask = 1; mask < (1L << n); ++mask) {
    int k = __builtin_popcountl(mask);
    if (k < 2) continue;
    for (const RatMat& t : tails[mask]) out[k - 1] = out[k - 1] + t;
  }
  return out;
}

FloatMat embedRookMatrix(const RookRepF& small, const RookRepF& big, const FloatMat& m) {
  FloatMat out(big.dim(), big.dim());
  long inner = small.innerDim();
  std::vector<int> map(small.supports().size());
  for (size_t i = 0; i < small.supports().size(); ++i) {
    int idx = big.supportIndexOf(small.supports()[i]);
    if (idx < 0) throw std::invalid_argument("embedRookMatrix: support not present");
    map[i] = idx;
  }
  for (size_t bi = 0; bi < small.supports().size(); ++bi)
    for (size_t bj = 0; bj < small.supports().size(); ++bj)
      for (long i = 0; i < inner; ++i)
        for (long j = 0; j < inner; ++j)
          out.at(map[bi] * inner + i, map[bj] * inner + j) =
              m.at(static_cast<long>(bi) * inner + i, static_cast<long>(bj) * inner + j);
  return out;
}

std::string matrixJson(const RatMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(ratStr(m.at(i, j)));
    rows.push_back(row);
  }
  return rows.dump();
}

std::string matrixJson(const FloatMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace rookalg
