#include "rookalg/multipartition.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace rookalg {

Multipartition::Multipartition(const FiniteGroupTable* group)
    : group_(group), byPsi_(group->numChars()) {}

Multipartition::Multipartition(const FiniteGroupTable* group, std::vector<Partition> byPsi)
    : group_(group), byPsi_(std::move(byPsi)) {
  if (static_cast<int>(byPsi_.size()) != group->numChars())
    throw std::invalid_argument("multipartition must have one slot per character");
  for (const Partition& p : byPsi_) norm_ += p.size();
}

const Partition& Multipartition::at(int psi) const {
  if (psi < 0 || psi >= static_cast<int>(byPsi_.size()))
    throw std::invalid_argument("character index out of range");
  return byPsi_[psi];
}

std::vector<int> Multipartition::support() const {
  std::vector<int> s;
  for (size_t i = 0; i < byPsi_.size(); ++i)
    if (!byPsi_[i].empty()) s.push_back(static_cast<int>(i));
  return s;
}

Multipartition Multipartition::withSlot(int psi, Partition p) const {
  std::vector<Partition> copy = byPsi_;
  copy.at(psi) = std::move(p);
  return Multipartition(group_, std::move(copy));
}

std::string Multipartition::str() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (size_t i = 0; i < byPsi_.size(); ++i) {
    if (byPsi_[i].empty()) continue;
    j[std::to_string(i)] = byPsi_[i].parts();
  }
  return j.dump();
}

Multipartition Multipartition::parse(const std::string& text, const FiniteGroupTable* group) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid multipartition literal: ") + e.what());
  }
  std::vector<Partition> byPsi(group->numChars());
  for (auto it = j.begin(); it != j.end(); ++it) {
    int psi = std::stoi(it.key());
    if (psi < 0 || psi >= group->numChars())
      throw std::invalid_argument("multipartition slot out of range: " + it.key());
    byPsi[psi] = Partition(it.value().get<std::vector<long>>());
  }
  return Multipartition(group, std::move(byPsi));
}

Int wreathDim(const Multipartition& bla) {
  const FiniteGroupTable* G = bla.group();
  Int dim = factorialInt(bla.norm());
  for (int psi = 0; psi < G->numChars(); ++psi) {
    const Partition& nu = bla.at(psi);
    if (nu.empty()) continue;
    dim /= factorialInt(nu.size());
    dim *= dimPartition(nu);
    for (long i = 0; i < nu.size(); ++i) dim *= G->dims[psi];
  }
  return dim;
}

std::vector<Multipartition> multipartitionsOf(long n, const FiniteGroupTable* group) {
  int slots = group->numChars();
  std::vector<Multipartition> out;
  std::vector<Partition> cur(slots);
  auto rec = [&](auto&& self, int slot, long rest) -> void {
    if (slot == slots - 1) {
      for (const Partition& p : partitionsOf(rest)) {
        cur[slot] = p;
        out.emplace_back(group, cur);
      }
      cur[slot] = Partition();
      return;
    }
    for (long w = 0; w <= rest; ++w) {
      for (const Partition& p : partitionsOf(w)) {
        cur[slot] = p;
        self(self, slot + 1, rest - w);
      }
    }
    cur[slot] = Partition();
  };
  if (slots == 0) throw std::logic_error("group with no characters");
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitionsUpTo(long n, const FiniteGroupTable* group) {
  std::vector<Multipartition> out;
  for (long k = 0; k <= n; ++k) {
    auto mk = multipartitionsOf(k, group);
    out.insert(out.end(), mk.begin(), mk.end());
  }
  return out;
}

Multipartition mpBracket(const Multipartition& bla, long n) {
  if (n < bla.norm()) throw std::invalid_argument("mpBracket requires n >= ||bla||");
  const Partition& slot0 = bla.at(0);
  return bla.withSlot(0, lambdaBracket(slot0, slot0.size() + (n - bla.norm())));
}

std::vector<std::pair<int, Multipartition>> mpBranchDown(const Multipartition& bla) {
  std::vector<std::pair<int, Multipartition>> out;
  for (int psi = 0; psi < bla.group()->numChars(); ++psi) {
    if (bla.at(psi).empty()) continue;
    for (const Partition& mu : branchDown(bla.at(psi)))
      out.emplace_back(psi, bla.withSlot(psi, mu));
  }
  return out;
}

std::vector<Multipartition> mpStripSetXn(const Multipartition& bla, long n) {
  long grow = n - bla.norm();
  if (grow <= 0) throw std::invalid_argument("mpStripSetXn requires n > ||bla||");
  std::vector<Multipartition> out;
  const Partition& slot0 = bla.at(0);
  for (const Partition& nu : stripSetXn(slot0, slot0.size() + grow))
    out.push_back(bla.withSlot(0, nu));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rookalg
