#include "rookalg/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rookalg/linalg.hpp"

namespace rookalg {

AlgebraElement::AlgebraElement(int n, const FiniteGroupTable* group) : n_(n), group_(group) {
  if (!group) throw std::invalid_argument("null group");
}

AlgebraElement AlgebraElement::monomial(const MonomialMatrix& m, const Rat& c) {
  AlgebraElement x(m.size(), m.group());
  if (c != 0) x.terms_.emplace(m, c);
  return x;
}

AlgebraElement AlgebraElement::one(int n, const FiniteGroupTable* group) {
  return monomial(MonomialMatrix::identity(n, group));
}

Rat AlgebraElement::coeff(const MonomialMatrix& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> AlgebraElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) d = std::max(d.value_or(-1), m.degree());
  return d;
}

void AlgebraElement::add(const MonomialMatrix& m, const Rat& c) {
  if (m.size() != n_ || m.group() != group_)
    throw std::invalid_argument("term size/group mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::checkCompatible(const AlgebraElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("algebra element size mismatch");
  if (group_ != other.group_) throw std::invalid_argument("algebra element group mismatch");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  checkCompatible(other);
  AlgebraElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add(m, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  checkCompatible(other);
  AlgebraElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add(m, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  checkCompatible(other);
  AlgebraElement r(n_, group_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add(compose(ma, mb), ca * cb);
  return r;
}

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
  AlgebraElement r(n_, group_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement r(n_, group_);
  for (const auto& [m, c] : terms_) r.add(m.star(), c);
  return r;
}

AlgebraElement AlgebraElement::truncated(int r) const {
  AlgebraElement out(r, group_);
  for (const auto& [m, c] : terms_) out.add(m.truncate(r), c);
  return out;
}

AlgebraElement AlgebraElement::shifted() const {
  AlgebraElement out(n_ + 1, group_);
  for (const auto& [m, c] : terms_) out.add(m.shiftUp(), c);
  return out;
}

AlgebraElement AlgebraElement::embedded(int n) const {
  AlgebraElement out(n, group_);
  for (const auto& [m, c] : terms_) out.add(m.embed(n), c);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      first = false;
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m.isIdentity()) {
      out << ratStr(a);
    } else if (a == 1) {
      out << m.str();
    } else {
      out << ratStr(a) << " * " << m.str();
    }
  }
  return out.str();
}

AlgebraElement epsBar(int i, int n, const FiniteGroupTable* group) {
  AlgebraElement r = AlgebraElement::one(n, group);
  r.add(MonomialMatrix::epsOne(i, n, group), -1);
  return r;
}

std::vector<MonomialMatrix> centralizerGenerators(int n, const CentralizerSpec& spec,
                                                  const FiniteGroupTable* group) {
  if (spec.m < 0 || spec.m > n) throw std::invalid_argument("centralizer level out of range");
  std::vector<MonomialMatrix> gens;
  if (spec.m == n) return gens;
  for (int j = spec.m + 1; j <= n - 1; ++j)
    gens.push_back(MonomialMatrix::transposition(j, j + 1, n, group));
  for (int g : group->generators())
    gens.push_back(MonomialMatrix::diag(g, spec.m + 1, n, group));
  if (spec.flavor == CentralizerSpec::Flavor::Semigroup)
    gens.push_back(MonomialMatrix::epsOne(spec.m + 1, n, group));
  return gens;
}

CentralizerWitness isInCentralizer(const AlgebraElement& x, const CentralizerSpec& spec) {
  if (spec.m > x.size()) throw std::invalid_argument("centralizer level exceeds element size");
  for (const MonomialMatrix& g : centralizerGenerators(x.size(), spec, x.group())) {
    AlgebraElement ge = AlgebraElement::monomial(g);
    AlgebraElement comm = x * ge - ge * x;
    if (!comm.isZero()) return CentralizerWitness{false, g, comm};
  }
  return CentralizerWitness{};
}

std::vector<AlgebraElement> centralizerBasis(int n, const CentralizerSpec& spec,
                                             const FiniteGroupTable* group) {
  if (n > 5) throw std::invalid_argument("centralizerBasis bound exceeded (n <= 5)");
  bool semigroup = spec.flavor == CentralizerSpec::Flavor::Semigroup;
  std::vector<MonomialMatrix> basis =
      semigroup ? enumerateGamma(n, group) : enumerateGn(n, group);
  std::map<MonomialMatrix, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  // Conjugation orbits under the invertible generators.
  CentralizerSpec unitSpec{spec.m, CentralizerSpec::Flavor::Group};
  std::vector<MonomialMatrix> unitGens = centralizerGenerators(n, unitSpec, group);
  std::vector<int> orbit(basis.size(), -1);
  int orbitCount = 0;
  for (size_t start = 0; start < basis.size(); ++start) {
    if (orbit[start] >= 0) continue;
    int id = orbitCount++;
    std::vector<int> stack{static_cast<int>(start)};
    orbit[start] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const MonomialMatrix& g : unitGens) {
        MonomialMatrix conj = compose(compose(g, basis[cur]), g.star());
        int idx = index.at(conj);
        if (orbit[idx] < 0) {
          orbit[idx] = id;
          stack.push_back(idx);
        }
      }
    }
  }

  std::vector<AlgebraElement> sums;
  for (int id = 0; id < orbitCount; ++id) {
    AlgebraElement s(n, group);
    for (size_t i = 0; i < basis.size(); ++i)
      if (orbit[i] == id) s.add(basis[i], 1);
    sums.push_back(std::move(s));
  }
  if (!semigroup || spec.m == n) return sums;

  // Impose commutation with eps_{m+1} inside the span of the orbit sums.
  AlgebraElement eps =
      AlgebraElement::monomial(MonomialMatrix::epsOne(spec.m + 1, n, group));
  std::vector<AlgebraElement> defect;
  std::map<MonomialMatrix, int> rowIndex;
  for (const AlgebraElement& s : sums) {
    AlgebraElement d = s * eps - eps * s;
    for (const auto& [m, c] : d.terms())
      rowIndex.emplace(m, static_cast<int>(rowIndex.size()));
    defect.push_back(std::move(d));
  }
  RatMat a(static_cast<long>(rowIndex.size()), static_cast<long>(sums.size()));
  for (size_t col = 0; col < defect.size(); ++col)
    for (const auto& [m, c] : defect[col].terms()) a.at(rowIndex.at(m), static_cast<long>(col)) = c;
  std::vector<AlgebraElement> out;
  for (const auto& v : kernelBasis(std::move(a))) {
    AlgebraElement e(n, group);
    for (size_t i = 0; i < sums.size(); ++i)
      if (v[i] != 0) e = e + sums[i].scaled(v[i]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace rookalg
