#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rookalg/group_table.hpp"
#include "rookalg/partitions.hpp"

namespace rookalg {

/// A map from the irreducible characters of a finite group to partitions.
/// Slot 0 (the trivial character) is the growing slot.
class Multipartition {
 public:
  explicit Multipartition(const FiniteGroupTable* group);
  Multipartition(const FiniteGroupTable* group, std::vector<Partition> byPsi);

  const FiniteGroupTable* group() const { return group_; }
  const Partition& at(int psi) const;
  long norm() const { return norm_; }  // ||bla||
  std::vector<int> support() const;
  Multipartition withSlot(int psi, Partition p) const;

  auto operator<=>(const Multipartition&) const = default;

  std::string str() const;  // {"0":[2,1],"1":[1]}
  static Multipartition parse(const std::string& text, const FiniteGroupTable* group);

 private:
  const FiniteGroupTable* group_;
  std::vector<Partition> byPsi_;
  long norm_ = 0;
};

/// dim pi^bla = multinomial(n; n_i) * prod dim nu(i) * (dim psi_i)^{n_i}.
Int wreathDim(const Multipartition& bla);

std::vector<Multipartition> multipartitionsOf(long n, const FiniteGroupTable* group);
std::vector<Multipartition> multipartitionsUpTo(long n, const FiniteGroupTable* group);

/// bla[n]: adds a row of length n - ||bla|| to the trivial-character slot.
Multipartition mpBracket(const Multipartition& bla, long n);

/// All (psi, bmu) with bmu obtained from bla by removing a box in slot psi.
std::vector<std::pair<int, Multipartition>> mpBranchDown(const Multipartition& bla);

/// {bnu : bnu(psi_1) interlaces bla(psi_1), other slots equal, ||bnu|| = n}.
std::vector<Multipartition> mpStripSetXn(const Multipartition& bla, long n);

}  // namespace rookalg
