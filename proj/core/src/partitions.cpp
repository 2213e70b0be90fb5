#include "rookalg/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rookalg {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

long Partition::part(long i) const {
  if (i < 1) throw std::invalid_argument("partition row index is 1-based");
  if (i > rows()) return 0;
  return parts_[i - 1];
}

Partition Partition::conjugate() const {
  std::vector<long> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0]);
    for (long j = 0; j < parts_[0]; ++j) {
      long count = 0;
      for (long p : parts_)
        if (p > j) ++count;
      cols[j] = count;
    }
  }
  return Partition(cols);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.rows() > rows()) return false;
  for (long i = 1; i <= mu.rows(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  auto notSpace = [](char c) { return !isspace(static_cast<unsigned char>(c)); };
  s.erase(std::remove_if(s.begin(), s.end(),
                         [&](char c) { return !notSpace(c); }),
          s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition literal must look like [3,1,1]: " + text);
  std::string body = s.substr(1, s.size() - 2);
  std::vector<long> parts;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("bad partition literal: " + text);
      parts.push_back(std::stol(tok));
    }
  }
  return Partition(parts);
}

std::vector<Partition> partitionsOf(long n) {
  if (n < 0) throw std::invalid_argument("partitionsOf: negative n");
  std::vector<Partition> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rest, long maxPart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> partitionsUpTo(long n) {
  std::vector<Partition> out;
  for (long k = 0; k <= n; ++k) {
    auto pk = partitionsOf(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

bool interlaces(const Partition& nu, const Partition& la) {
  long rows = std::max(nu.rows(), la.rows() + 1);
  for (long i = 1; i <= rows; ++i) {
    if (nu.part(i) < la.part(i)) return false;
    if (la.part(i) < nu.part(i + 1)) return false;
  }
  return true;
}

Partition lambdaBracket(const Partition& la, long n) {
  if (n < la.size())
    throw std::invalid_argument("lambdaBracket requires n >= |lambda|");
  long newPart = n - la.size();
  if (newPart == 0) return la;
  std::vector<long> parts = la.parts();
  auto pos = std::upper_bound(parts.begin(), parts.end(), newPart, std::greater<long>());
  parts.insert(pos, newPart);
  return Partition(parts);
}

std::vector<Partition> stripSetXn(const Partition& la, long n) {
  if (n <= la.size()) throw std::invalid_argument("stripSetXn requires n > |lambda|");
  // nu_1 free above la_1; nu_{i+1} ranges in [la_{i+1}, la_i].
  std::vector<Partition> out;
  std::vector<long> tail;  // nu_2, nu_3, ...
  long tailRows = la.rows();
  auto rec = [&](auto&& self, long i, long sum) -> void {
    if (i > tailRows) {
      long nu1 = n - sum;
      if (nu1 >= la.part(1) && (tail.empty() || nu1 >= tail[0])) {
        std::vector<long> parts;
        parts.push_back(nu1);
        for (long p : tail)
          if (p > 0) parts.push_back(p);
        out.emplace_back(parts);
      }
      return;
    }
    for (long v = la.part(i); v >= la.part(i + 1); --v) {
      if (sum + v > n) continue;
      tail.push_back(v);
      self(self, i + 1, sum + v);
      tail.pop_back();
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> branchDown(const Partition& la) {
  if (la.empty()) throw std::invalid_argument("cannot remove a box from the empty diagram");
  std::vector<Partition> out;
  for (long i = 1; i <= la.rows(); ++i) {
    if (la.part(i) > la.part(i + 1)) {
      std::vector<long> parts = la.parts();
      parts[i - 1] -= 1;
      if (parts[i - 1] == 0) parts.erase(parts.begin() + (i - 1));
      out.emplace_back(parts);
    }
  }
  return out;
}

std::vector<Partition> branchUp(const Partition& la) {
  std::vector<Partition> out;
  for (long i = 1; i <= la.rows() + 1; ++i) {
    if (i == 1 || la.part(i) < la.part(i - 1)) {
      std::vector<long> parts = la.parts();
      if (i <= la.rows())
        parts[i - 1] += 1;
      else
        parts.push_back(1);
      out.emplace_back(parts);
    }
  }
  return out;
}

Int hookProduct(const Partition& la) {
  Partition conj = la.conjugate();
  Int prod = 1;
  for (long i = 1; i <= la.rows(); ++i)
    for (long j = 1; j <= la.part(i); ++j)
      prod *= (la.part(i) - j) + (conj.part(j) - i) + 1;
  return prod;
}

namespace {

std::map<std::vector<long>, Int>& dimMemo() {
  static std::map<std::vector<long>, Int> memo;
  return memo;
}
std::mutex& dimMutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int dimPartition(const Partition& la) {
  if (la.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(dimMutex());
    auto it = dimMemo().find(la.parts());
    if (it != dimMemo().end()) return it->second;
  }
  Int d = factorialInt(la.size()) / hookProduct(la);
  std::lock_guard<std::mutex> lock(dimMutex());
  dimMemo().emplace(la.parts(), d);
  return d;
}

Int zRho(const Partition& rho) {
  Int z = 1;
  long mult = 0;
  long prev = -1;
  auto flush = [&]() {
    if (prev > 0) {
      for (long i = 0; i < mult; ++i) z *= prev;
      z *= factorialInt(mult);
    }
  };
  for (long p : rho.parts()) {
    if (p == prev) {
      ++mult;
    } else {
      flush();
      prev = p;
      mult = 1;
    }
  }
  flush();
  return z;
}

namespace {

std::vector<long> betaSet(const Partition& la, long m) {
  // {la_i + m - i : i = 1..m}, ascending.
  std::vector<long> b(m);
  for (long i = 1; i <= m; ++i) b[m - i] = la.part(i) + m - i;
  return b;
}

Partition fromBetaSet(std::vector<long> b) {
  std::sort(b.begin(), b.end());
  long m = static_cast<long>(b.size());
  std::vector<long> parts;
  for (long i = m; i >= 1; --i) {
    long p = b[i - 1] - (i - 1);
    if (p > 0) parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  return Partition(parts);
}

using CharKey = std::pair<std::vector<long>, std::vector<long>>;

std::map<CharKey, Int>& charMemo() {
  static std::map<CharKey, Int> memo;
  return memo;
}
std::mutex& charMutex() {
  static std::mutex m;
  return m;
}

Int charValueRec(const Partition& la, const std::vector<long>& rho, size_t pos) {
  long remaining = 0;
  for (size_t i = pos; i < rho.size(); ++i) remaining += rho[i];
  if (remaining != la.size()) throw std::logic_error("character recursion size mismatch");
  if (la.empty()) return 1;
  if (pos >= rho.size()) return 0;
  if (rho[pos] == 1) {
    // All remaining parts are 1 (rho is sorted descending): the count of
    // standard tableaux paths.
    return dimPartition(la);
  }

  CharKey key(la.parts(), std::vector<long>(rho.begin() + pos, rho.end()));
  {
    std::lock_guard<std::mutex> lock(charMutex());
    auto it = charMemo().find(key);
    if (it != charMemo().end()) return it->second;
  }

  long t = rho[pos];
  long m = la.rows();
  std::vector<long> b = betaSet(la, m);
  Int total = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    long target = b[i] - t;
    if (target < 0) continue;
    if (std::binary_search(b.begin(), b.end(), target)) continue;
    long height = 0;  // beta numbers strictly between target and b[i]
    for (long x : b)
      if (x > target && x < b[i]) ++height;
    std::vector<long> nb = b;
    nb[i] = target;
    Int sub = charValueRec(fromBetaSet(std::move(nb)), rho, pos + 1);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }

  std::lock_guard<std::mutex> lock(charMutex());
  charMemo().emplace(std::move(key), total);
  return total;
}

}  // namespace

Int charValue(const Partition& la, const Partition& rho) {
  if (la.size() != rho.size())
    throw std::invalid_argument("charValue requires |lambda| = |rho|");
  if (la.empty()) return 1;
  std::vector<long> parts = rho.parts();  // already sorted descending
  return charValueRec(la, parts, 0);
}

Partition padWithOnes(const Partition& rho, long n) {
  if (rho.size() > n) throw std::invalid_argument("padWithOnes: |rho| > n");
  std::vector<long> parts = rho.parts();
  parts.insert(parts.end(), static_cast<size_t>(n - rho.size()), 1);
  return Partition(parts);
}

}  // namespace rookalg
