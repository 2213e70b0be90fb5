#include "oracles/character_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rookalg::testing {

namespace {

std::vector<int> representativeOneLine(const Partition& rho, long n) {
  // One-line form (0-based): disjoint cycles on consecutive runs.
  std::vector<int> w(n);
  int pos = 0;
  for (long part : rho.parts()) {
    for (int t = 0; t < part; ++t) w[pos + t] = pos + static_cast<int>((t + 1) % part);
    pos += static_cast<int>(part);
  }
  for (; pos < n; ++pos) w[pos] = pos;
  return w;
}

}  // namespace

Int permutationModuleCharacter(const Partition& mu, const Partition& rho) {
  if (mu.size() != rho.size()) throw std::invalid_argument("shape mismatch");
  long n = mu.size();
  std::vector<int> w = representativeOneLine(rho, n);
  // Tabloids = assignments of points to rows with the given row sizes,
  // enumerated as multiset permutations.
  std::vector<int> assign;
  for (long r = 0; r < mu.rows(); ++r)
    assign.insert(assign.end(), mu.part(r + 1), static_cast<int>(r));
  std::sort(assign.begin(), assign.end());
  Int fixed = 0;
  do {
    bool ok = true;
    for (long j = 0; j < n && ok; ++j) ok = assign[w[j]] == assign[j];
    if (ok) ++fixed;
  } while (std::next_permutation(assign.begin(), assign.end()));
  return fixed;
}

Rat characterFromPermutationModules(const Partition& la, const Partition& rho) {
  long n = la.size();
  if (rho.size() != n) throw std::invalid_argument("shape mismatch");
  static std::map<long, std::map<Partition, std::map<Partition, Rat>>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> shapes = partitionsOf(n);
    // Process shapes from (n) downward: each permutation-module character
    // equals the irreducible of the same shape plus previously extracted ones.
    std::sort(shapes.begin(), shapes.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    std::map<Partition, std::map<Partition, Rat>> table;
    for (const Partition& mu : shapes) {
      std::map<Partition, Rat> chi;
      for (const Partition& cls : partitionsOf(n))
        chi[cls] = Rat(permutationModuleCharacter(mu, cls));
      for (const auto& [known, knownChi] : table) {
        Rat mult = 0;  // <chi_M, chi^known> with the class-size weights
        for (const Partition& cls : partitionsOf(n))
          mult += chi.at(cls) * knownChi.at(cls) / Rat(zRho(cls));
        if (mult != 0)
          for (const Partition& cls : partitionsOf(n)) chi[cls] -= mult * knownChi.at(cls);
      }
      table.emplace(mu, std::move(chi));
    }
    it = cache.emplace(n, std::move(table)).first;
  }
  return it->second.at(la).at(rho);
}

}  // namespace rookalg::testing
