#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rookalg/multipartition.hpp"
#include "rookalg/partitions.hpp"

namespace rookalg {

Rat evalPstar(long k, const Rat& sigma, const Partition& la);
Rat evalQ(long k, const Partition& la);       // pstar with sigma = 0
Rat evalFrakp(long k, const Partition& la);   // pstar with sigma = 1 (slot-0 variable)
Rat evalPsharp(const Partition& rho, const Partition& nu);
Rat evalPsharpOne(long k, const Partition& nu);  // rho = (k)
Rat evalSstar(const Partition& la, const Partition& nu);
Rat evalHstar(long k, const Partition& la);  // q_k + q_1^k
/// Wreath analogue of hstar along the growing slot: q_k(bla(psi_1)) + ||bla||^k.
Rat evalHstarWreath(long k, const Multipartition& bla);

/// The 1/n-corrected power-sum combination approximating hstar:
/// sum_i (-1)^i C(k,i) n^{-i} frakp_{k+i}(lambda[n]). Requires n >= |la|+la_1.
Rat hstarApprox(long k, const Partition& la, long n);
/// Same along the growing slot of a multipartition; requires the bracketed
/// slot to be in the sorted-prepend regime.
Rat hstarApproxWreath(long k, const Multipartition& bla, long n);

/// Monomial in the p#_k generators: sorted (k, psi) factors. psi = -1 marks
/// the plain (non-wreath) algebra.
struct PsharpKey {
  std::vector<std::pair<long, int>> factors;  // sorted descending
  long weight() const;
  void normalize();
  auto operator<=>(const PsharpKey&) const = default;
  std::string str() const;
};

class PsharpPolynomial {
 public:
  void add(PsharpKey key, const Rat& c);
  const std::map<PsharpKey, Rat>& coeffs() const { return coeffs_; }
  long weightedDegree() const;
  bool operator==(const PsharpPolynomial&) const = default;
  Rat eval(const Partition& nu) const;
  Rat evalM(const Multipartition& bnu) const;
  std::string str() const;

 private:
  std::map<PsharpKey, Rat> coeffs_;
};

/// Symbolic shifted symmetric function: sums/products/scalings of the
/// generator atoms, with a derived filtration-degree bound.
class ShiftedFunction {
 public:
  static ShiftedFunction constant(Rat c);
  static ShiftedFunction pstar(long k, Rat sigma);
  static ShiftedFunction q(long k);
  static ShiftedFunction frakp(long k);
  static ShiftedFunction psharp(Partition rho);
  static ShiftedFunction sstar(Partition la);
  static ShiftedFunction hstar(long k);

  /// The embedding into the psi-th tensor slot of the wreath algebra.
  ShiftedFunction tagged(int psi) const;

  ShiftedFunction operator+(const ShiftedFunction&) const;
  ShiftedFunction operator*(const ShiftedFunction&) const;
  ShiftedFunction scaled(const Rat&) const;

  long degreeBound() const;
  bool isWreath() const;  // any tagged atom

  Rat eval(const Partition& la) const;       // untagged functions
  Rat evalM(const Multipartition& bla) const;  // tagged functions

  std::string str() const;
  /// Literal syntax: pstar(3,1), q(2), frakp(2), psharp([2,1]), sstar([1,1]),
  /// hstar(2), rationals, +, *, parentheses; an optional @psi tag per atom.
  static ShiftedFunction parse(const std::string& text);

  struct Node;
  explicit ShiftedFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

class PsharpSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique polynomial in the p# generators of weighted degree <= the
/// declared bound agreeing with f on all (multi)partitions of size <= bound,
/// validated at size bound+1. Retries with the doubled bound before failing.
PsharpPolynomial expressInPsharp(const ShiftedFunction& f,
                                 const FiniteGroupTable* wreath = nullptr);

}  // namespace rookalg
