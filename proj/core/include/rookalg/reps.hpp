#pragma once

#include <map>
#include <memory>
#include <optional>
#include <variant>

#include "rookalg/algebra.hpp"
#include "rookalg/linalg.hpp"
#include "rookalg/multipartition.hpp"

namespace rookalg {

/// Young seminormal model of pi^lambda (exact rational), acting on S(|lambda|).
class SymRep {
 public:
  explicit SymRep(Partition la);

  const Partition& shape() const { return la_; }
  int points() const { return n_; }
  long dim() const { return dim_; }

  /// rowOf()[t][v] is the 0-based row containing value v+1 in tableau t.
  const std::vector<std::vector<int>>& tableauRows() const { return rowOf_; }

  const RatMat& adjacentImage(int i) const;          // s_i, 1 <= i <= n-1
  const RatMat& transpositionImage(int a, int b) const;  // a < b
  RatMat image(const MonomialMatrix& perm) const;

 private:
  Partition la_;
  int n_;
  long dim_;
  std::vector<std::vector<int>> rowOf_, colOf_;
  std::vector<RatMat> adjacent_;
  std::vector<RatMat> transpositions_;  // indexed a*n+b, a<b (0-based)
};

/// Orthogonal variant in floating point (for operator-norm experiments).
class SymRepF {
 public:
  explicit SymRepF(Partition la);
  const Partition& shape() const { return la_; }
  int points() const { return n_; }
  long dim() const { return dim_; }
  const FloatMat& adjacentImage(int i) const;
  FloatMat image(const MonomialMatrix& perm) const;

 private:
  Partition la_;
  int n_;
  long dim_;
  std::vector<FloatMat> adjacent_;
};

/// Exact model of pi^bla for G(n) = G wr S(n): tensor model on a single
/// support, induced from the block parabolic otherwise.
class WreathRep {
 public:
  explicit WreathRep(Multipartition bla);

  const Multipartition& shape() const { return bla_; }
  int points() const { return n_; }
  long dim() const { return dim_; }
  RatMat image(const MonomialMatrix& x) const;  // x in G(n)

 private:
  Multipartition bla_;
  int n_ = 0;
  long dim_ = 0;
  bool single_ = false;
  int phi_ = 0;                       // support character (single case)
  std::shared_ptr<const SymRep> inner_;  // pi^nu (single case)
  // induced case
  std::vector<int> supportPsis_;
  std::vector<int> blockSizes_;
  std::vector<int> blockOffsets_;
  std::vector<std::shared_ptr<const WreathRep>> factors_;
  long innerDim_ = 0;
  std::vector<std::vector<int>> assignments_;  // block id per slot
  std::map<std::vector<int>, int> assignmentIndex_;

  RatMat imageSingle(const MonomialMatrix& x) const;
  RatMat imageInduced(const MonomialMatrix& x) const;
};

/// The rook-monoid model T^lambda_n / T^bla_n: basis indexed by (support
/// subset, inner basis vector); monomials act block-monomially.
class RookRep {
 public:
  RookRep(Partition la, int n, const FiniteGroupTable* group);
  RookRep(Multipartition bla, int n);

  int points() const { return n_; }
  long ell() const { return ell_; }
  long dim() const { return dim_; }
  long innerDim() const { return innerDim_; }
  const FiniteGroupTable* group() const { return group_; }
  const std::vector<std::vector<int>>& supports() const { return supports_; }

  struct Resolved {
    bool dead = true;
    int target = -1;    // support index of the source block
    MonomialMatrix u;   // inner group element
    Resolved() : u(0, &FiniteGroupTable::trivialGroup()) {}
  };
  /// Resolution of omega_B * gamma for block B = supports()[i].
  Resolved resolve(int supportIdx, const MonomialMatrix& gamma) const;

  RatMat innerImage(const MonomialMatrix& u) const;
  RatMat image(const MonomialMatrix& gamma) const;
  /// Exact application of an algebra element via symbolic block sums (each
  /// distinct accumulated inner sum is evaluated once).
  RatMat apply(const AlgebraElement& x) const;
  Rat traceOf(const MonomialMatrix& gamma) const;
  /// Projector onto blocks supported inside {1..r}.
  RatMat compression(int r) const;

 private:
  int n_;
  long ell_;
  const FiniteGroupTable* group_;
  std::optional<SymRep> symInner_;
  std::optional<WreathRep> wreathInner_;
  long innerDim_ = 1;
  long dim_ = 0;
  std::vector<std::vector<int>> supports_;
  std::map<std::vector<int>, int> supportIndex_;

  void initSupports();
};

/// Float-orthogonal rook model (trivial group), for norm experiments.
class RookRepF {
 public:
  RookRepF(Partition la, int n, const FiniteGroupTable* group);
  int points() const { return n_; }
  long ell() const { return ell_; }
  long dim() const { return dim_; }
  long innerDim() const { return innerDim_; }
  const std::vector<std::vector<int>>& supports() const { return supports_; }
  int supportIndexOf(const std::vector<int>& s) const;
  FloatMat image(const MonomialMatrix& gamma) const;
  FloatMat apply(const AlgebraElement& x) const;
  FloatMat compression(int r) const;

 private:
  int n_;
  long ell_;
  const FiniteGroupTable* group_;
  std::optional<SymRepF> inner_;
  long innerDim_ = 1;
  long dim_ = 0;
  std::vector<std::vector<int>> supports_;
  std::map<std::vector<int>, int> supportIndex_;
};

/// Symbolic block sums of an algebra element over the rook basis with
/// support size ell: pure monoid arithmetic, independent of the inner
/// representation, so they can be shared across all shapes of that size.
struct RookBlockSums {
  int n = 0;
  long ell = 0;
  const FiniteGroupTable* group = nullptr;
  std::map<std::pair<int, int>, std::map<MonomialMatrix, Rat>> blocks;
};

RookBlockSums rookSymbolicApply(int n, long ell, const FiniteGroupTable* group,
                                const AlgebraElement& x);

RatMat evaluateBlockSums(const RookRep& rep, const RookBlockSums& sums);

using RepModel = std::variant<SymRep, SymRepF, WreathRep, RookRep, RookRepF>;

long repDim(const RepModel&);
RatMat applyAlgebra(const RepModel&, const AlgebraElement& x);
FloatMat applyAlgebraF(const RepModel&, const AlgebraElement& x);

class NonScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The scalar by which a central element acts; throws NonScalarError when the
/// image is not scalar.
Rat centralEigenvalue(const RepModel&, const AlgebraElement& x);

/// Images of all cycle sums at once: result[k-1] is the image of
/// cycleSum(k, n) in the seminormal model, k = 1..n.
std::vector<RatMat> cycleSumImages(const SymRep& rep);

/// Places a matrix over the size-r rook basis into the size-N rook basis
/// (same shape, supports inside {1..r}).
FloatMat embedRookMatrix(const RookRepF& small, const RookRepF& big, const FloatMat& m);

std::string matrixJson(const RatMat& m);
std::string matrixJson(const FloatMat& m);

}  // namespace rookalg
