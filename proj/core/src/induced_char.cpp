#include "rookalg/induced_char.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookalg {

MonomialMatrix subMonomial(const MonomialMatrix& x, const std::vector<int>& s) {
  int m = static_cast<int>(s.size());
  std::vector<int> row(m, 0), lab(m, 0);
  for (int t = 0; t < m; ++t) {
    int col = s[t];
    if (!x.hasEntry(col)) throw std::invalid_argument("subMonomial: column leaves the set");
    int r = x.rowOf(col);
    auto pos = std::lower_bound(s.begin(), s.end(), r);
    if (pos == s.end() || *pos != r) throw std::invalid_argument("subMonomial: row leaves the set");
    row[t] = static_cast<int>(pos - s.begin()) + 1;
    lab[t] = x.labelOf(col);
  }
  return MonomialMatrix::fromColumnMap(row, lab, x.group());
}

namespace {

bool mapsIntoItself(const MonomialMatrix& x, const std::vector<int>& s) {
  for (int col : s) {
    if (!x.hasEntry(col)) return false;
    if (!std::binary_search(s.begin(), s.end(), x.rowOf(col))) return false;
  }
  return true;
}

}  // namespace

Rat inducedCharValue(const std::vector<ParabolicBlock>& blocks, const MonomialMatrix& x) {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  if (x.size() != n) throw std::invalid_argument("inducedCharValue: size mismatch");
  if (!x.isGroupElement())
    throw std::invalid_argument("inducedCharValue: element must be invertible");

  // Right cosets of the parabolic correspond to ordered set partitions of
  // {1..n} with the block sizes; the summand is nonzero only when x maps each
  // part into itself.
  Rat total = 0;
  std::vector<std::vector<int>> parts(blocks.size());
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, size_t blockIdx) -> void {
    if (blockIdx == blocks.size()) {
      Rat prod = 1;
      for (size_t b = 0; b < blocks.size(); ++b) {
        if (!mapsIntoItself(x, parts[b])) return;
        prod *= blocks[b].chi(subMonomial(x, parts[b]));
        if (prod == 0) return;
      }
      total += prod;
      return;
    }
    // Choose the sorted index set for this block; to avoid duplicates pick
    // ascending combinations of the unused indices.
    int need = blocks[blockIdx].size;
    std::vector<int> chosen;
    auto pick = [&](auto&& pickSelf, int from) -> void {
      if (static_cast<int>(chosen.size()) == need) {
        parts[blockIdx] = chosen;
        self(self, blockIdx + 1);
        return;
      }
      for (int c = from; c <= n; ++c) {
        if (used[c]) continue;
        used[c] = true;
        chosen.push_back(c);
        pickSelf(pickSelf, c + 1);
        chosen.pop_back();
        used[c] = false;
      }
    };
    pick(pick, 1);
  };
  rec(rec, 0);
  return total;
}

}  // namespace rookalg
