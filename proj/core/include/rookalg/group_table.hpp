#pragma once

#include <string>
#include <vector>

#include "rookalg/linalg.hpp"
#include "rookalg/rational.hpp"

namespace rookalg {

/// A finite group presented by its multiplication table, together with its
/// conjugacy classes and rational character table. Element 0 is the identity,
/// class 0 is {0}, character row 0 is trivial.
class FiniteGroupTable {
 public:
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mult;     // mult[a][b] = a*b
  std::vector<int> inv;                   // inverse per element
  std::vector<std::vector<int>> classes;  // partition of {0..order-1}
  std::vector<std::vector<Rat>> charTable;  // rows chi_psi, columns by class
  std::vector<int> dims;                    // dims[psi] = chi_psi(e)

  int numChars() const { return static_cast<int>(charTable.size()); }
  bool trivial() const { return order == 1; }
  int classOf(int g) const { return classOf_[g]; }
  Rat chi(int psi, int g) const { return charTable[psi][classOf(g)]; }
  /// Conjugate character value: chi_psi(g^{-1}).
  Rat chiBar(int psi, int g) const { return charTable[psi][classOf(inv[g])]; }

  /// Small generating set of the group (greedy closure).
  const std::vector<int>& generators() const;

  /// Exact matrix models of the irreducibles (built-in groups only).
  bool hasModels() const { return !models_.empty(); }
  /// models()[psi][g] is the dims[psi]-dimensional matrix of element g.
  const std::vector<std::vector<RatMat>>& models() const;

  /// Checks every structural invariant; throws std::invalid_argument with a
  /// located message on the first failure.
  void validate() const;

  /// Recomputes derived lookups (classOf); call after filling public fields.
  void finalize();

  static const FiniteGroupTable& trivialGroup();
  static const FiniteGroupTable& builtin(const std::string& name);
  static std::vector<std::string> builtinNames();

 private:
  std::vector<int> classOf_;
  mutable std::vector<int> generators_;
  std::vector<std::vector<RatMat>> models_;

  friend FiniteGroupTable makeBuiltin(const std::string&);
};

}  // namespace rookalg
