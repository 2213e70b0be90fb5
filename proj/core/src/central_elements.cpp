#include "rookalg/central_elements.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rookalg {

namespace {

/// Runs fn over every ordered tuple of k pairwise distinct indices in 1..n.
template <typename Fn>
void forTuples(long k, int n, Fn&& fn) {
  std::vector<int> tuple;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long>(tuple.size()) == k) {
      fn(tuple);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(i);
      self(self);
      tuple.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
}

/// Runs fn over every tuple of k group labels.
template <typename Fn>
void forLabels(long k, const FiniteGroupTable* g, Fn&& fn) {
  std::vector<int> labels(k, 0);
  while (true) {
    fn(labels);
    long j = 0;
    while (j < k && labels[j] == g->order - 1) labels[j++] = 0;
    if (j == k) return;
    ++labels[j];
  }
}

/// The monomial g_1^(i_1)...g_k^(i_k) (i_1,...,i_k): column i_t maps to row
/// i_{t+1} with label g_{t+1} (cyclically).
MonomialMatrix labelledCycle(const std::vector<int>& tuple, const std::vector<int>& labels,
                             int n, const FiniteGroupTable* g) {
  std::vector<int> row(n), lab(n, 0);
  for (int j = 0; j < n; ++j) row[j] = j + 1;
  long k = static_cast<long>(tuple.size());
  for (long t = 0; t < k; ++t) {
    long next = (t + 1) % k;
    row[tuple[t] - 1] = tuple[next];
    lab[tuple[t] - 1] = labels[next];
  }
  return MonomialMatrix::fromColumnMap(row, lab, g);
}

int productOfLabels(const std::vector<int>& labels, const FiniteGroupTable* g) {
  // g_k ... g_1
  int p = 0;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) p = g->mult[p][*it];
  return p;
}

Rat powRat(const Rat& base, long e) {
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

AlgebraElement cycleSum(long k, int n, const FiniteGroupTable* group) {
  if (k < 1) throw std::invalid_argument("cycleSum requires k >= 1");
  AlgebraElement out(n, group);
  if (n < k) return out;
  if (k == 1) return AlgebraElement::one(n, group).scaled(n);
  forTuples(k, n, [&](const std::vector<int>& tuple) {
    out.add(MonomialMatrix::cycle(tuple, n, group), 1);
  });
  return out;
}

AlgebraElement cycleSumWreath(long k, int psi, int n, const FiniteGroupTable* group) {
  if (k < 1 || k > n) throw std::invalid_argument("cycleSumWreath requires 1 <= k <= n");
  if (psi < 0 || psi >= group->numChars()) throw std::invalid_argument("invalid character index");
  AlgebraElement out(n, group);
  Rat base(group->dims[psi], group->order);
  base.canonicalize();
  Rat prefactor = powRat(base, k);
  forTuples(k, n, [&](const std::vector<int>& tuple) {
    forLabels(k, group, [&](const std::vector<int>& labels) {
      Rat w = prefactor * group->chiBar(psi, productOfLabels(labels, group));
      if (w == 0) return;
      out.add(labelledCycle(tuple, labels, n, group), w);
    });
  });
  return out;
}

std::vector<Rat> identityIndicator(const FiniteGroupTable* group) {
  std::vector<Rat> phi(group->classes.size(), 0);
  phi[0] = 1;
  return phi;
}

std::vector<Rat> classFunctionForPsi(long k, int psi, const FiniteGroupTable* group) {
  std::vector<Rat> phi(group->classes.size());
  Rat base(group->dims[psi], group->order);
  base.canonicalize();
  Rat prefactor = powRat(base, k);
  for (size_t c = 0; c < group->classes.size(); ++c)
    phi[c] = prefactor * group->chiBar(psi, group->classes[c][0]);
  return phi;
}

AlgebraElement rookCycleSumPhi(long k, int n, const FiniteGroupTable* group,
                               const std::vector<Rat>& phiByClass) {
  if (k < 1) throw std::invalid_argument("rookCycleSumPhi requires k >= 1");
  if (phiByClass.size() != group->classes.size())
    throw std::invalid_argument("class function has wrong length");
  AlgebraElement out(n, group);
  if (n < k) return out;
  forTuples(k, n, [&](const std::vector<int>& tuple) {
    forLabels(k, group, [&](const std::vector<int>& labels) {
      Rat w = phiByClass[group->classOf(productOfLabels(labels, group))];
      if (w == 0) return;
      MonomialMatrix base = labelledCycle(tuple, labels, n, group);
      // Expand epsbar_{i_1}...epsbar_{i_k} = sum_S (-1)^{|S|} eps_S.
      long subsets = 1L << k;
      for (long mask = 0; mask < subsets; ++mask) {
        std::vector<int> row(n, 0), lab(n, 0);
        for (int j = 1; j <= n; ++j) {
          row[j - 1] = base.rowOf(j);
          lab[j - 1] = base.labelOf(j);
        }
        int bits = 0;
        for (long t = 0; t < k; ++t) {
          if (mask & (1L << t)) {
            row[tuple[t] - 1] = 0;
            lab[tuple[t] - 1] = 0;
            ++bits;
          }
        }
        out.add(MonomialMatrix::fromColumnMap(row, lab, group), bits % 2 ? -w : w);
      }
    });
  });
  return out;
}

AlgebraElement rookCycleSum(long k, int n, const FiniteGroupTable* group) {
  return rookCycleSumPhi(k, n, group, identityIndicator(group));
}

AlgebraElement jucysMurphy(int i, int n, const FiniteGroupTable* group) {
  if (i < 1) throw std::invalid_argument("jucysMurphy requires i >= 1");
  AlgebraElement out(n, group);
  if (n <= i) return out;
  for (int j = i + 1; j <= n; ++j) {
    for (int g = 0; g < group->order; ++g) {
      // g^(i) (g^-1)^(j) (i,j): column i -> row j with label g^-1, column j ->
      // row i with label g.
      std::vector<int> row(n), lab(n, 0);
      for (int c = 0; c < n; ++c) row[c] = c + 1;
      row[i - 1] = j;
      lab[i - 1] = group->inv[g];
      row[j - 1] = i;
      lab[j - 1] = g;
      MonomialMatrix base = MonomialMatrix::fromColumnMap(row, lab, group);
      for (long mask = 0; mask < 4; ++mask) {
        std::vector<int> r2 = row, l2 = lab;
        int bits = 0;
        if (mask & 1) {
          r2[i - 1] = 0;
          l2[i - 1] = 0;
          ++bits;
        }
        if (mask & 2) {
          r2[j - 1] = 0;
          l2[j - 1] = 0;
          ++bits;
        }
        out.add(MonomialMatrix::fromColumnMap(r2, l2, group), bits % 2 ? Rat(-1) : Rat(1));
      }
    }
  }
  return out;
}

AlgebraElement liftPsharp(const PsharpPolynomial& poly, int n, const FiniteGroupTable* group) {
  AlgebraElement out(n, group);
  for (const auto& [key, c] : poly.coeffs()) {
    AlgebraElement term = AlgebraElement::one(n, group).scaled(c);
    for (auto& [k, psi] : key.factors) {
      if (psi < 0) {
        if (!group->trivial())
          throw std::invalid_argument("plain p# key lifted over a nontrivial group");
        if (k == 1) {
          term = term.scaled(n);  // cycleSum(1,n) = n * 1
        } else {
          term = term * cycleSum(k, n, group);
        }
      } else {
        if (k > n) {
          term = AlgebraElement(n, group);  // convention: zero beyond n
        } else {
          term = term * cycleSumWreath(k, psi, n, group);
        }
      }
      if (term.isZero()) break;
    }
    out = out + term;
  }
  return out;
}

AlgebraElement liftToCenter(const ShiftedFunction& f, int n, const FiniteGroupTable* group) {
  const FiniteGroupTable* wreath = group->trivial() ? nullptr : group;
  return liftPsharp(expressInPsharp(f, wreath), n, group);
}

const PsharpPolynomial& frakpExpansion(long j) {
  static std::mutex mu;
  static std::map<long, PsharpPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(j);
  if (it == cache.end())
    it = cache.emplace(j, expressInPsharp(ShiftedFunction::frakp(j))).first;
  return it->second;
}

AlgebraElement hstarCentralApprox(long k, int n) {
  const FiniteGroupTable* g = &FiniteGroupTable::trivialGroup();
  AlgebraElement out(n, g);
  for (long i = 0; i <= k; ++i) {
    Rat c = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
    if (i % 2) c = -c;
    out = out + liftPsharp(frakpExpansion(k + i), n, g).scaled(c);
  }
  return out;
}

AlgebraElement hstarCentralApproxWreath(long k, int n, const FiniteGroupTable* group) {
  AlgebraElement out(n, group);
  for (long i = 0; i <= k; ++i) {
    Rat c = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
    if (i % 2) c = -c;
    PsharpPolynomial tagged;
    for (const auto& [key, coeff] : frakpExpansion(k + i).coeffs()) {
      PsharpKey t;
      for (auto& [kk, psi] : key.factors) t.factors.emplace_back(kk, 0);
      tagged.add(std::move(t), coeff);
    }
    out = out + liftPsharp(tagged, n, group).scaled(c);
  }
  return out;
}

}  // namespace rookalg
