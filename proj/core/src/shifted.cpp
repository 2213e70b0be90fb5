#include "rookalg/shifted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rookalg/linalg.hpp"

namespace rookalg {

namespace {

Rat powRat(const Rat& base, long e) {
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rat evalPstar(long k, const Rat& sigma, const Partition& la) {
  if (k < 1) throw std::invalid_argument("pstar requires k >= 1");
  Rat total = 0;
  for (long i = 1; i <= la.rows(); ++i) {
    Rat shift = sigma - i;
    total += powRat(Rat(la.part(i)) + shift, k) - powRat(shift, k);
  }
  return total;
}

Rat evalQ(long k, const Partition& la) { return evalPstar(k, 0, la); }

Rat evalFrakp(long k, const Partition& la) { return evalPstar(k, 1, la); }

Rat evalPsharp(const Partition& rho, const Partition& nu) {
  if (rho.empty()) throw std::invalid_argument("psharp requires a nonempty index");
  long k = rho.size();
  long n = nu.size();
  if (n < k) return 0;
  Int numer = fallingInt(n, k) * charValue(nu, padWithOnes(rho, n));
  return Rat(numer) / Rat(dimPartition(nu));
}

Rat evalPsharpOne(long k, const Partition& nu) {
  return evalPsharp(Partition({k}), nu);
}

Rat evalSstar(const Partition& la, const Partition& nu) {
  if (la.empty()) throw std::invalid_argument("sstar requires a nonempty index");
  Rat total = 0;
  for (const Partition& rho : partitionsOf(la.size()))
    total += Rat(charValue(la, rho)) / Rat(zRho(rho)) * evalPsharp(rho, nu);
  return total;
}

Rat evalHstar(long k, const Partition& la) {
  return evalQ(k, la) + powRat(evalQ(1, la), k);
}

Rat evalHstarWreath(long k, const Multipartition& bla) {
  return evalQ(k, bla.at(0)) + powRat(Rat(bla.norm()), k);
}

Rat hstarApprox(long k, const Partition& la, long n) {
  if (k < 1) throw std::invalid_argument("hstarApprox requires k >= 1");
  if (n < la.size() + la.part(1))
    throw std::invalid_argument("hstarApprox requires n >= |lambda| + lambda_1");
  Partition lan = lambdaBracket(la, n);
  Rat total = 0;
  for (long i = 0; i <= k; ++i) {
    Rat term = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
    if (i % 2) term = -term;
    total += term * evalFrakp(k + i, lan);
  }
  return total;
}

Rat hstarApproxWreath(long k, const Multipartition& bla, long n) {
  if (k < 1) throw std::invalid_argument("hstarApprox requires k >= 1");
  const Partition& slot0 = bla.at(0);
  if (n - bla.norm() < slot0.part(1))
    throw std::invalid_argument("hstarApproxWreath requires the growing row on top");
  Partition grown = mpBracket(bla, n).at(0);
  Rat total = 0;
  for (long i = 0; i <= k; ++i) {
    Rat term = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
    if (i % 2) term = -term;
    total += term * evalFrakp(k + i, grown);
  }
  return total;
}

long PsharpKey::weight() const {
  long w = 0;
  for (auto& [k, psi] : factors) w += k;
  return w;
}

void PsharpKey::normalize() {
  std::sort(factors.begin(), factors.end(), std::greater<std::pair<long, int>>());
}

std::string PsharpKey::str() const {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << "*";
    out << "p#" << factors[i].first;
    if (factors[i].second >= 0) out << "@" << factors[i].second;
  }
  return out.str();
}

void PsharpPolynomial::add(PsharpKey key, const Rat& c) {
  if (c == 0) return;
  key.normalize();
  auto [it, inserted] = coeffs_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long PsharpPolynomial::weightedDegree() const {
  long d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, k.weight());
  return d;
}

Rat PsharpPolynomial::eval(const Partition& nu) const {
  Rat total = 0;
  for (const auto& [key, c] : coeffs_) {
    Rat prod = c;
    for (auto& [k, psi] : key.factors) {
      if (psi >= 0) throw std::invalid_argument("wreath key evaluated on a partition");
      prod *= evalPsharpOne(k, nu);
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

Rat PsharpPolynomial::evalM(const Multipartition& bnu) const {
  Rat total = 0;
  for (const auto& [key, c] : coeffs_) {
    Rat prod = c;
    for (auto& [k, psi] : key.factors) {
      if (psi < 0) throw std::invalid_argument("plain key evaluated on a multipartition");
      prod *= evalPsharpOne(k, bnu.at(psi));
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

std::string PsharpPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << ratStr(c) << "*" << key.str();
  }
  return out.str();
}

struct ShiftedFunction::Node {
  enum class Kind { Const, PStar, Psharp, Sstar, Hstar, Sum, Product, Scale };
  Kind kind = Kind::Const;
  Rat value;      // Const, Scale factor
  long k = 0;     // PStar/Hstar order
  Rat sigma;      // PStar shift
  Partition idx;  // Psharp/Sstar index
  int psi = -1;   // tag; -1 = untagged
  std::shared_ptr<const Node> left, right;
};

using Node = ShiftedFunction::Node;

namespace {

ShiftedFunction wrap(std::shared_ptr<const Node> n);

std::shared_ptr<Node> makeNode(Node::Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

long nodeDegree(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Const:
      return 0;
    case Node::Kind::PStar:
    case Node::Kind::Hstar:
      return n.k;
    case Node::Kind::Psharp:
    case Node::Kind::Sstar:
      return n.idx.size();
    case Node::Kind::Sum:
      return std::max(nodeDegree(*n.left), nodeDegree(*n.right));
    case Node::Kind::Product:
      return nodeDegree(*n.left) + nodeDegree(*n.right);
    case Node::Kind::Scale:
      return nodeDegree(*n.left);
  }
  return 0;
}

bool nodeWreath(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Const:
      return false;
    case Node::Kind::Sum:
    case Node::Kind::Product:
      return nodeWreath(*n.left) || nodeWreath(*n.right);
    case Node::Kind::Scale:
      return nodeWreath(*n.left);
    default:
      return n.psi >= 0;
  }
}

Rat atomEval(const Node& n, const Partition& la) {
  switch (n.kind) {
    case Node::Kind::PStar:
      return evalPstar(n.k, n.sigma, la);
    case Node::Kind::Psharp:
      return evalPsharp(n.idx, la);
    case Node::Kind::Sstar:
      return evalSstar(n.idx, la);
    case Node::Kind::Hstar:
      return evalHstar(n.k, la);
    default:
      throw std::logic_error("not an atom");
  }
}

Rat nodeEval(const Node& n, const Partition& la) {
  switch (n.kind) {
    case Node::Kind::Const:
      return n.value;
    case Node::Kind::Sum:
      return nodeEval(*n.left, la) + nodeEval(*n.right, la);
    case Node::Kind::Product:
      return nodeEval(*n.left, la) * nodeEval(*n.right, la);
    case Node::Kind::Scale:
      return n.value * nodeEval(*n.left, la);
    default:
      if (n.psi >= 0) throw std::invalid_argument("tagged function evaluated on a partition");
      return atomEval(n, la);
  }
}

Rat nodeEvalM(const Node& n, const Multipartition& bla) {
  switch (n.kind) {
    case Node::Kind::Const:
      return n.value;
    case Node::Kind::Sum:
      return nodeEvalM(*n.left, bla) + nodeEvalM(*n.right, bla);
    case Node::Kind::Product:
      return nodeEvalM(*n.left, bla) * nodeEvalM(*n.right, bla);
    case Node::Kind::Scale:
      return n.value * nodeEvalM(*n.left, bla);
    default:
      if (n.psi < 0) throw std::invalid_argument("untagged atom evaluated on a multipartition");
      return atomEval(n, bla.at(n.psi));
  }
}

std::shared_ptr<const Node> nodeTag(const Node& n, int psi) {
  auto copy = std::make_shared<Node>(n);
  switch (n.kind) {
    case Node::Kind::Const:
      break;
    case Node::Kind::Sum:
    case Node::Kind::Product:
      copy->left = nodeTag(*n.left, psi);
      copy->right = nodeTag(*n.right, psi);
      break;
    case Node::Kind::Scale:
      copy->left = nodeTag(*n.left, psi);
      break;
    default:
      if (n.psi >= 0) throw std::invalid_argument("atom already tagged");
      copy->psi = psi;
  }
  return copy;
}

std::string nodeStr(const Node& n) {
  std::ostringstream out;
  switch (n.kind) {
    case Node::Kind::Const:
      return ratStr(n.value);
    case Node::Kind::PStar:
      if (n.sigma == 0)
        out << "q(" << n.k << ")";
      else if (n.sigma == 1)
        out << "frakp(" << n.k << ")";
      else
        out << "pstar(" << n.k << "," << ratStr(n.sigma) << ")";
      break;
    case Node::Kind::Psharp:
      out << "psharp(" << n.idx.str() << ")";
      break;
    case Node::Kind::Sstar:
      out << "sstar(" << n.idx.str() << ")";
      break;
    case Node::Kind::Hstar:
      out << "hstar(" << n.k << ")";
      break;
    case Node::Kind::Sum:
      out << "(" << nodeStr(*n.left) << " + " << nodeStr(*n.right) << ")";
      return out.str();
    case Node::Kind::Product:
      out << "(" << nodeStr(*n.left) << " * " << nodeStr(*n.right) << ")";
      return out.str();
    case Node::Kind::Scale:
      out << ratStr(n.value) << "*(" << nodeStr(*n.left) << ")";
      return out.str();
  }
  if (n.psi >= 0) out << "@" << n.psi;
  return out.str();
}

ShiftedFunction wrap(std::shared_ptr<const Node> n) {
  struct Access : ShiftedFunction {
    explicit Access(std::shared_ptr<const Node> p) : ShiftedFunction(std::move(p)) {}
  };
  return Access(std::move(n));
}

}  // namespace

ShiftedFunction ShiftedFunction::constant(Rat c) {
  auto n = makeNode(Node::Kind::Const);
  n->value = std::move(c);
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::pstar(long k, Rat sigma) {
  if (k < 1) throw std::invalid_argument("pstar requires k >= 1");
  auto n = makeNode(Node::Kind::PStar);
  n->k = k;
  n->sigma = std::move(sigma);
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::q(long k) { return pstar(k, 0); }
ShiftedFunction ShiftedFunction::frakp(long k) { return pstar(k, 1); }

ShiftedFunction ShiftedFunction::psharp(Partition rho) {
  if (rho.empty()) throw std::invalid_argument("psharp requires a nonempty index");
  auto n = makeNode(Node::Kind::Psharp);
  n->idx = std::move(rho);
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::sstar(Partition la) {
  if (la.empty()) throw std::invalid_argument("sstar requires a nonempty index");
  auto n = makeNode(Node::Kind::Sstar);
  n->idx = std::move(la);
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::hstar(long k) {
  if (k < 1) throw std::invalid_argument("hstar requires k >= 1");
  auto n = makeNode(Node::Kind::Hstar);
  n->k = k;
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::tagged(int psi) const {
  if (psi < 0) throw std::invalid_argument("tag must be a character index");
  return wrap(nodeTag(*node_, psi));
}

ShiftedFunction ShiftedFunction::operator+(const ShiftedFunction& o) const {
  auto n = makeNode(Node::Kind::Sum);
  n->left = node_;
  n->right = o.node_;
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::operator*(const ShiftedFunction& o) const {
  auto n = makeNode(Node::Kind::Product);
  n->left = node_;
  n->right = o.node_;
  return ShiftedFunction(n);
}

ShiftedFunction ShiftedFunction::scaled(const Rat& c) const {
  auto n = makeNode(Node::Kind::Scale);
  n->value = c;
  n->left = node_;
  return ShiftedFunction(n);
}

long ShiftedFunction::degreeBound() const { return nodeDegree(*node_); }
bool ShiftedFunction::isWreath() const { return nodeWreath(*node_); }
Rat ShiftedFunction::eval(const Partition& la) const { return nodeEval(*node_, la); }
Rat ShiftedFunction::evalM(const Multipartition& bla) const { return nodeEvalM(*node_, bla); }
std::string ShiftedFunction::str() const { return nodeStr(*node_); }

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "' in function literal");
  }

  ShiftedFunction parseExpr() {
    ShiftedFunction f = parseTerm();
    while (true) {
      skip();
      if (eat('+')) {
        f = f + parseTerm();
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        f = f + parseTerm().scaled(-1);
      } else {
        return f;
      }
    }
  }

  ShiftedFunction parseTerm() {
    ShiftedFunction f = parseFactor();
    while (true) {
      skip();
      if (eat('*'))
        f = f * parseFactor();
      else
        return f;
    }
  }

  long parseLong() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected integer in function literal");
    return std::stol(s.substr(start, pos - start));
  }

  Rat parseRational() {
    long num = parseLong();
    skip();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      long den = parseLong();
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  Partition parsePartition() {
    skip();
    if (pos >= s.size() || s[pos] != '[')
      throw std::invalid_argument("expected partition literal");
    size_t end = s.find(']', pos);
    if (end == std::string::npos) throw std::invalid_argument("unterminated partition literal");
    Partition p = Partition::parse(s.substr(pos, end - pos + 1));
    pos = end + 1;
    return p;
  }

  ShiftedFunction applyTag(ShiftedFunction f) {
    skip();
    if (pos < s.size() && s[pos] == '@') {
      ++pos;
      return f.tagged(static_cast<int>(parseLong()));
    }
    return f;
  }

  ShiftedFunction parseFactor() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of function literal");
    if (s[pos] == '(') {
      ++pos;
      ShiftedFunction f = parseExpr();
      expect(')');
      return f;
    }
    if (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '+')
      return ShiftedFunction::constant(parseRational());
    size_t start = pos;
    while (pos < s.size() && isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    expect('(');
    if (name == "pstar") {
      long k = parseLong();
      expect(',');
      Rat sigma = parseRational();
      expect(')');
      return applyTag(ShiftedFunction::pstar(k, sigma));
    }
    if (name == "q" || name == "frakp" || name == "hstar") {
      long k = parseLong();
      expect(')');
      ShiftedFunction f = name == "q"       ? ShiftedFunction::q(k)
                          : name == "frakp" ? ShiftedFunction::frakp(k)
                                            : ShiftedFunction::hstar(k);
      return applyTag(f);
    }
    if (name == "psharp" || name == "sstar") {
      Partition p = parsePartition();
      expect(')');
      ShiftedFunction f =
          name == "psharp" ? ShiftedFunction::psharp(p) : ShiftedFunction::sstar(p);
      return applyTag(f);
    }
    throw std::invalid_argument("unknown function name: " + name);
  }
};

}  // namespace

ShiftedFunction ShiftedFunction::parse(const std::string& text) {
  Parser p(text);
  ShiftedFunction f = p.parseExpr();
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("trailing input in function literal");
  return f;
}

namespace {

std::vector<PsharpKey> plainMonomials(long d) {
  std::vector<PsharpKey> keys;
  for (const Partition& p : partitionsUpTo(d)) {
    PsharpKey key;
    for (long part : p.parts()) key.factors.emplace_back(part, -1);
    key.normalize();
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<PsharpKey> wreathMonomials(long d, const FiniteGroupTable* g) {
  std::vector<PsharpKey> keys;
  for (const Multipartition& m : multipartitionsUpTo(d, g)) {
    PsharpKey key;
    for (int psi = 0; psi < g->numChars(); ++psi)
      for (long part : m.at(psi).parts()) key.factors.emplace_back(part, psi);
    key.normalize();
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

Rat keyEvalPlain(const PsharpKey& key, const Partition& nu) {
  Rat prod = 1;
  for (auto& [k, psi] : key.factors) {
    prod *= evalPsharpOne(k, nu);
    if (prod == 0) break;
  }
  return prod;
}

Rat keyEvalWreath(const PsharpKey& key, const Multipartition& bnu) {
  Rat prod = 1;
  for (auto& [k, psi] : key.factors) {
    prod *= evalPsharpOne(k, bnu.at(psi));
    if (prod == 0) break;
  }
  return prod;
}

PsharpPolynomial trySolve(const ShiftedFunction& f, long d, const FiniteGroupTable* wreath,
                          std::string& error) {
  PsharpPolynomial out;
  if (wreath) {
    std::vector<PsharpKey> keys = wreathMonomials(d, wreath);
    std::vector<Multipartition> pts = multipartitionsUpTo(d, wreath);
    RatMat a(static_cast<long>(pts.size()), static_cast<long>(keys.size()));
    std::vector<Rat> rhs(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = 0; j < keys.size(); ++j) a.at(i, j) = keyEvalWreath(keys[j], pts[i]);
      rhs[i] = f.evalM(pts[i]);
    }
    std::vector<Rat> x = solveLinear(std::move(a), std::move(rhs));
    if (x.empty()) {
      error = "no p#-expansion within degree bound " + std::to_string(d);
      return out;
    }
    for (size_t j = 0; j < keys.size(); ++j) out.add(keys[j], x[j]);
    for (const Multipartition& v : multipartitionsOf(d + 1, wreath))
      if (out.evalM(v) != f.evalM(v)) {
        error = "p#-expansion fails validation at weight " + std::to_string(d + 1);
        return PsharpPolynomial();
      }
  } else {
    std::vector<PsharpKey> keys = plainMonomials(d);
    std::vector<Partition> pts = partitionsUpTo(d);
    RatMat a(static_cast<long>(pts.size()), static_cast<long>(keys.size()));
    std::vector<Rat> rhs(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = 0; j < keys.size(); ++j) a.at(i, j) = keyEvalPlain(keys[j], pts[i]);
      rhs[i] = f.eval(pts[i]);
    }
    std::vector<Rat> x = solveLinear(std::move(a), std::move(rhs));
    if (x.empty()) {
      error = "no p#-expansion within degree bound " + std::to_string(d);
      return out;
    }
    for (size_t j = 0; j < keys.size(); ++j) out.add(keys[j], x[j]);
    for (const Partition& v : partitionsOf(d + 1))
      if (out.eval(v) != f.eval(v)) {
        error = "p#-expansion fails validation at weight " + std::to_string(d + 1);
        return PsharpPolynomial();
      }
  }
  error.clear();
  return out;
}

}  // namespace

PsharpPolynomial expressInPsharp(const ShiftedFunction& f, const FiniteGroupTable* wreath) {
  if (f.isWreath() && !wreath)
    throw std::invalid_argument("tagged function needs a wreath group");
  if (!f.isWreath() && wreath && !wreath->trivial()) {
    // Untagged f over a nontrivial group: treat as the slot-0 embedding.
    return expressInPsharp(f.tagged(0), wreath);
  }
  const FiniteGroupTable* g = (wreath && !wreath->trivial()) ? wreath : nullptr;

  long d = f.degreeBound();
  std::string error;
  PsharpPolynomial out = trySolve(f, d, g, error);
  if (error.empty()) return out;
  std::string firstError = error;
  out = trySolve(f, 2 * d, g, error);
  if (error.empty()) return out;
  throw PsharpSolveError("expressInPsharp: " + firstError + "; retry with bound " +
                         std::to_string(2 * d) + ": " + error);
}

}  // namespace rookalg
