#include "rookalg/group_table.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace rookalg {

namespace {

std::string loc(const std::string& what, int i, int j = -1) {
  std::string s = what + "[" + std::to_string(i) + "]";
  if (j >= 0) s += "[" + std::to_string(j) + "]";
  return s;
}

}  // namespace

void FiniteGroupTable::finalize() {
  classOf_.assign(order, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int g : classes[c]) {
      if (g < 0 || g >= order) throw std::invalid_argument(loc("classes", c) + ": element out of range");
      classOf_[g] = static_cast<int>(c);
    }
}

void FiniteGroupTable::validate() const {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (static_cast<int>(mult.size()) != order) throw std::invalid_argument("mult: wrong row count");
  for (int a = 0; a < order; ++a) {
    if (static_cast<int>(mult[a].size()) != order)
      throw std::invalid_argument(loc("mult", a) + ": wrong column count");
    for (int b = 0; b < order; ++b)
      if (mult[a][b] < 0 || mult[a][b] >= order)
        throw std::invalid_argument(loc("mult", a, b) + ": out of range");
  }
  for (int a = 0; a < order; ++a) {
    if (mult[0][a] != a || mult[a][0] != a)
      throw std::invalid_argument(loc("mult", a) + ": index 0 is not a two-sided identity");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw std::invalid_argument(loc("mult", a, b) + ": associativity fails at c=" + std::to_string(c));
  if (static_cast<int>(inv.size()) != order) throw std::invalid_argument("inv: wrong length");
  for (int a = 0; a < order; ++a) {
    if (inv[a] < 0 || inv[a] >= order) throw std::invalid_argument(loc("inv", a) + ": out of range");
    if (mult[a][inv[a]] != 0 || mult[inv[a]][a] != 0)
      throw std::invalid_argument(loc("inv", a) + ": not a two-sided inverse");
  }

  // Classes: a partition into full conjugacy classes, class 0 = {identity}.
  std::vector<int> seen(order, 0);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument(loc("classes", c) + ": empty class");
    for (int g : classes[c]) {
      if (g < 0 || g >= order) throw std::invalid_argument(loc("classes", c) + ": out of range");
      if (seen[g]++) throw std::invalid_argument(loc("classes", c) + ": element repeated");
    }
  }
  for (int g = 0; g < order; ++g)
    if (!seen[g]) throw std::invalid_argument("classes: element " + std::to_string(g) + " missing");
  if (classes.empty() || classes[0] != std::vector<int>{0})
    throw std::invalid_argument("classes[0] must be {0} (the identity)");
  for (size_t c = 0; c < classes.size(); ++c) {
    std::set<int> cls(classes[c].begin(), classes[c].end());
    std::set<int> orbit;
    for (int h = 0; h < order; ++h) orbit.insert(mult[mult[h][classes[c][0]]][inv[h]]);
    if (orbit != cls)
      throw std::invalid_argument(loc("classes", c) + ": not a full conjugacy class");
  }

  int k = static_cast<int>(classes.size());
  if (static_cast<int>(charTable.size()) != k)
    throw std::invalid_argument("char_table: must have one row per class");
  for (int p = 0; p < k; ++p)
    if (static_cast<int>(charTable[p].size()) != k)
      throw std::invalid_argument(loc("char_table", p) + ": wrong length");
  for (int c = 0; c < k; ++c)
    if (charTable[0][c] != 1)
      throw std::invalid_argument(loc("char_table", 0, c) + ": row 0 must be the trivial character");
  // Row orthogonality with class weights.
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      Rat sum = 0;
      for (int c = 0; c < k; ++c) {
        // bar(chi_q)(g) = chi_q(g^{-1}); inverse class of class c:
        int invClass = -1;
        for (size_t cc = 0; cc < classes.size(); ++cc)
          if (std::find(classes[cc].begin(), classes[cc].end(), inv[classes[c][0]]) != classes[cc].end())
            invClass = static_cast<int>(cc);
        sum += Rat(static_cast<long>(classes[c].size())) * charTable[p][c] * charTable[q][invClass];
      }
      Rat expect = (p == q) ? Rat(order) : Rat(0);
      if (sum != expect)
        throw std::invalid_argument(loc("char_table", p) + ": orthogonality with row " + std::to_string(q) + " fails");
    }
  if (static_cast<int>(dims.size()) != k) throw std::invalid_argument("dims: wrong length");
  Rat sq = 0;
  for (int p = 0; p < k; ++p) {
    if (charTable[p][0] != dims[p])
      throw std::invalid_argument(loc("dims", p) + ": must equal the character degree");
    sq += Rat(dims[p]) * Rat(dims[p]);
  }
  if (sq != order) throw std::invalid_argument("dims: sum of squares must equal the order");
}

const std::vector<int>& FiniteGroupTable::generators() const {
  if (!generators_.empty() || order == 1) return generators_;
  std::vector<int> gens;
  std::set<int> closure{0};
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(closure.begin(), closure.end());
      for (int a : cur)
        for (int b : cur)
          if (closure.insert(mult[a][b]).second) grew = true;
    }
  };
  for (int g = 1; g < order && static_cast<int>(closure.size()) < order; ++g) {
    if (closure.count(g)) continue;
    gens.push_back(g);
    closure.insert(g);
    closure.insert(inv[g]);
    close();
  }
  generators_ = gens;
  return generators_;
}

const std::vector<std::vector<RatMat>>& FiniteGroupTable::models() const {
  if (models_.empty())
    throw std::runtime_error("group '" + name +
                             "' has no built-in irreducible matrix models; matrix-model "
                             "operations require a built-in group");
  return models_;
}

namespace {

std::vector<std::vector<int>> multFromPerms(const std::vector<std::vector<int>>& perms) {
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, -1));
  auto composed = [&](int a, int b) {
    // (a*b)(x) = a(b(x))
    std::vector<int> c(perms[a].size());
    for (size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
    return c;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto c = composed(a, b);
      for (int i = 0; i < n; ++i)
        if (perms[i] == c) {
          mult[a][b] = i;
          break;
        }
    }
  return mult;
}

RatMat mat2(long a, long b, long c, long d) {
  RatMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

RatMat mat1(const Rat& v) {
  RatMat m(1, 1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

FiniteGroupTable makeBuiltin(const std::string& name) {
  FiniteGroupTable g;
  g.name = name;
  if (name == "trivial") {
    g.order = 1;
    g.mult = {{0}};
    g.inv = {0};
    g.classes = {{0}};
    g.charTable = {{Rat(1)}};
    g.dims = {1};
    g.models_ = {{RatMat::identity(1)}};
  } else if (name == "Z2") {
    g.order = 2;
    g.mult = {{0, 1}, {1, 0}};
    g.inv = {0, 1};
    g.classes = {{0}, {1}};
    g.charTable = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    g.dims = {1, 1};
    g.models_ = {{mat1(1), mat1(1)}, {mat1(1), mat1(-1)}};
  } else if (name == "V4") {
    g.order = 4;
    g.mult = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    g.inv = {0, 1, 2, 3};
    g.classes = {{0}, {1}, {2}, {3}};
    g.charTable = {{Rat(1), Rat(1), Rat(1), Rat(1)},
                   {Rat(1), Rat(1), Rat(-1), Rat(-1)},
                   {Rat(1), Rat(-1), Rat(1), Rat(-1)},
                   {Rat(1), Rat(-1), Rat(-1), Rat(1)}};
    g.dims = {1, 1, 1, 1};
    for (int p = 0; p < 4; ++p) {
      std::vector<RatMat> mats;
      for (int e = 0; e < 4; ++e) mats.push_back(mat1(g.charTable[p][e]));
      g.models_.push_back(mats);
    }
  } else if (name == "S3") {
    // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
    std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    g.order = 6;
    g.mult = multFromPerms(perms);
    g.inv.assign(6, -1);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (g.mult[a][b] == 0) g.inv[a] = b;
    g.classes = {{0}, {1, 2, 3}, {4, 5}};
    g.charTable = {{Rat(1), Rat(1), Rat(1)},
                   {Rat(1), Rat(-1), Rat(1)},
                   {Rat(2), Rat(0), Rat(-1)}};
    g.dims = {1, 1, 2};
    RatMat A = mat2(-1, 1, 0, 1);  // (01) on the root basis
    RatMat B = mat2(1, 0, 1, -1);  // (12)
    std::vector<RatMat> std2 = {RatMat::identity(2), A, A * B * A, B, A * B, (A * B) * (A * B)};
    std::vector<RatMat> triv, sign;
    for (int e = 0; e < 6; ++e) {
      triv.push_back(mat1(1));
      sign.push_back(mat1(g.charTable[1][e == 0 ? 0 : (e <= 3 ? 1 : 2)]));
    }
    g.models_ = {triv, sign, std2};
  } else if (name == "D4") {
    // Elements r^a s^b encoded as a + 4b, a mod 4, b mod 2, with s r = r^3 s.
    g.order = 8;
    auto enc = [](int a, int b) { return (a & 3) + 4 * (b & 1); };
    g.mult.assign(8, std::vector<int>(8));
    for (int a1 = 0; a1 < 4; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int a2 = 0; a2 < 4; ++a2)
          for (int b2 = 0; b2 < 2; ++b2) {
            // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + a2*(-1)^b1} s^{b1+b2}
            int a = (a1 + (b1 ? (4 - a2) : a2)) & 3;
            g.mult[enc(a1, b1)][enc(a2, b2)] = enc(a, b1 ^ b2);
          }
    g.inv.assign(8, -1);
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        if (g.mult[x][y] == 0) g.inv[x] = y;
    g.classes = {{0}, {2}, {1, 3}, {4, 6}, {5, 7}};
    g.charTable = {{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                   {Rat(1), Rat(1), Rat(1), Rat(-1), Rat(-1)},
                   {Rat(1), Rat(1), Rat(-1), Rat(1), Rat(-1)},
                   {Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(1)},
                   {Rat(2), Rat(-2), Rat(0), Rat(0), Rat(0)}};
    g.dims = {1, 1, 1, 1, 2};
    RatMat R = mat2(0, -1, 1, 0);
    RatMat S = mat2(1, 0, 0, -1);
    std::vector<RatMat> two;
    for (int x = 0; x < 8; ++x) {
      int a = x & 3, b = x >> 2;
      RatMat m = RatMat::identity(2);
      for (int i = 0; i < a; ++i) m = m * R;
      if (b) m = m * S;
      two.push_back(m);
    }
    g.models_.resize(5);
    g.models_[4] = two;
    g.finalize();
    for (int p = 0; p < 4; ++p) {
      std::vector<RatMat> mats;
      for (int e = 0; e < 8; ++e) mats.push_back(mat1(g.charTable[p][g.classOf(e)]));
      g.models_[p] = mats;
    }
  } else {
    throw std::invalid_argument("unknown built-in group: " + name);
  }
  g.finalize();
  g.validate();
  return g;
}

const FiniteGroupTable& FiniteGroupTable::trivialGroup() { return builtin("trivial"); }

const FiniteGroupTable& FiniteGroupTable::builtin(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FiniteGroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_unique<FiniteGroupTable>(makeBuiltin(name))).first;
  return *it->second;
}

std::vector<std::string> FiniteGroupTable::builtinNames() {
  return {"trivial", "Z2", "V4", "S3", "D4"};
}

}  // namespace rookalg
