#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rookalg/rational.hpp"

namespace rookalg {

/// A partition: weakly decreasing positive parts; the empty list is the
/// empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  long size() const { return total_; }  // |lambda|
  long rows() const { return static_cast<long>(parts_.size()); }
  long part(long i) const;  // 1-based, 0 beyond the last row
  const std::vector<long>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu subseteq lambda

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // "[3,1,1]", "[]" for empty
  static Partition parse(const std::string& text);

 private:
  std::vector<long> parts_;
  long total_ = 0;
};

std::vector<Partition> partitionsOf(long n);
std::vector<Partition> partitionsUpTo(long n);  // all |lambda| <= n

/// nu interlaces lambda: nu_1 >= lambda_1 >= nu_2 >= lambda_2 >= ...
bool interlaces(const Partition& nu, const Partition& la);

/// Inserts the part n - |lambda| into lambda (sorted insertion). Requires
/// n >= |lambda|; when n = |lambda| the new part is empty and lambda returns.
Partition lambdaBracket(const Partition& la, long n);

/// All nu of size n with nu interlacing lambda. Requires n > |lambda|.
std::vector<Partition> stripSetXn(const Partition& la, long n);

std::vector<Partition> branchDown(const Partition& la);  // remove a corner
std::vector<Partition> branchUp(const Partition& la);    // add a corner

Int hookProduct(const Partition& la);
Int dimPartition(const Partition& la);  // number of standard tableaux

/// Centralizer order of the conjugacy class with cycle type rho.
Int zRho(const Partition& rho);

/// Irreducible character chi^lambda at cycle type rho (|lambda| = |rho|),
/// computed by border-strip recursion over beta sets, memoized.
Int charValue(const Partition& la, const Partition& rho);

/// Cycle type rho joined with (n - |rho|) fixed points.
Partition padWithOnes(const Partition& rho, long n);

}  // namespace rookalg
