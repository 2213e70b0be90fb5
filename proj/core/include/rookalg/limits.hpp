#pragma once

#include <memory>
#include <optional>

#include "rookalg/central_elements.hpp"
#include "rookalg/reps.hpp"

namespace rookalg {

/// Degree bounds (in n) of the truncated coefficients of a family, as
/// rational functions of n.
struct CoefficientHint {
  long numDeg = 0;
  long denDeg = 0;
};

/// A symbolic sequence n -> element of C[G(n)] with declared centralizer
/// level and degree bound.
class SequenceFamily {
 public:
  enum class Kind { Stable, EpsApprox, Alpha, AlphaWreath, Lift, Shifted };

  static SequenceFamily stable(AlgebraElement x, int m);
  static SequenceFamily epsApprox(int i, int m, const FiniteGroupTable* group);
  static SequenceFamily alpha(long k);
  static SequenceFamily alphaWreath(long k, const FiniteGroupTable* group);
  static SequenceFamily lift(ShiftedFunction f, const FiniteGroupTable* group,
                             CoefficientHint hint, int level = 0);
  static SequenceFamily shiftedCopy(int steps, SequenceFamily inner);

  Kind kind() const { return kind_; }
  std::string name() const;
  const FiniteGroupTable* group() const { return group_; }
  int level() const { return m_; }
  long degreeBound() const { return degreeBound_; }
  CoefficientHint hint() const { return hint_; }
  long firstSample(int r) const;
  bool stableKind() const { return kind_ == Kind::Stable; }
  /// False when a stable payload has non-invertible support (such constants
  /// model the semigroup side directly).
  bool groupAlgebraValued() const;

  AlgebraElement eval(long n) const;

 private:
  SequenceFamily() = default;
  Kind kind_ = Kind::Stable;
  const FiniteGroupTable* group_ = nullptr;
  int m_ = 0;
  long degreeBound_ = 0;
  CoefficientHint hint_;
  // payloads
  std::optional<AlgebraElement> payload_;
  int i_ = 0;
  long k_ = 0;
  std::optional<PsharpPolynomial> poly_;
  std::string fnText_;
  int steps_ = 0;
  std::shared_ptr<const SequenceFamily> inner_;
};

struct RationalFit {
  std::vector<Rat> num, den;  // ascending coefficients in n
  Rat evalAt(long n) const;
  long numDegree() const;
  long denDegree() const;
  bool divergent() const { return numDegree() > denDegree(); }
  Rat limit() const;  // 0 if numDegree < denDegree, leading ratio if equal
  std::string str() const;
};

struct LimitCertificate {
  std::string mode;  // "stable", "rational-fit", "cauchy"
  std::vector<long> samplePoints, validationPoints;
  std::vector<std::pair<std::string, RationalFit>> fits;  // per monomial
  std::vector<double> cauchyDiffs;
  double tolerance = 0.0;
};

struct TruncationLimitResult {
  AlgebraElement limit;
  LimitCertificate certificate;
};

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact limit of theta_r(family(n)) as n -> infinity by rational-function
/// interpolation of every coefficient; throws LimitError on fit failure or a
/// divergent coefficient.
TruncationLimitResult truncationLimit(const SequenceFamily& family, int r);

/// Float fallback for families without usable hints: returns the value at
/// the largest scheduled n once successive differences fall below tol.
TruncationLimitResult truncationLimitCauchy(const SequenceFamily& family, int r,
                                            const std::vector<long>& schedule, double tol);

/// A theta-consistent, degree-bounded window (b_{r0},...,b_R) representing an
/// element of the projective-limit centralizer algebra at level m.
class WindowElement {
 public:
  WindowElement(int m, const FiniteGroupTable* group, std::vector<AlgebraElement> levels,
                long degreeBound);

  int level() const { return m_; }
  const FiniteGroupTable* group() const { return group_; }
  int lowSize() const { return levels_.empty() ? 0 : levels_.front().size(); }
  int highSize() const { return levels_.empty() ? 0 : levels_.back().size(); }
  const AlgebraElement& at(int r) const;
  const std::vector<AlgebraElement>& levels() const { return levels_; }
  long degreeBound() const { return degreeBound_; }

  /// Checks theta-consistency, centralizer membership (semigroup flavor) for
  /// r > m, and the degree bound; throws with the offending size.
  void validate() const;

  /// The shift endomorphism applied level-wise; lands at level m+1.
  WindowElement shiftedCopy() const;

  WindowElement operator+(const WindowElement&) const;
  WindowElement operator-(const WindowElement&) const;
  WindowElement scaled(const Rat&) const;
  bool operator==(const WindowElement&) const;

 private:
  int m_;
  const FiniteGroupTable* group_;
  std::vector<AlgebraElement> levels_;
  long degreeBound_;
};

/// Window assembled from truncation limits for r = max(m,1)..R, validated.
WindowElement assembleWindow(const SequenceFamily& family, int R);

WindowElement rookCycleSumWindow(long k, int R, const FiniteGroupTable* group,
                                 const std::vector<Rat>& phiByClass);
WindowElement jucysMurphyWindow(int i, int R, const FiniteGroupTable* group);
WindowElement stableWindow(const AlgebraElement& x, int m, int R);

struct CompressionReport {
  std::string family;
  std::string lambda;
  int r = 0;
  std::vector<long> schedule;
  std::vector<double> errors;
  double fittedC = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// For each N: the spectral-norm gap between the compressed action of
/// family(N) and the truncation-limit action at level r, with a C/N rate fit.
CompressionReport compressionExperiment(const SequenceFamily& family, const Partition& la,
                                        int r, const std::vector<long>& schedule,
                                        double tol = 1e-8);

struct PipelineReport {
  long k = 0;
  std::string shape;
  std::vector<long> schedule;
  std::vector<Rat> values;
  Rat target;
  std::vector<Rat> scaledGaps;  // n * |t(n) - target|
  bool routesAgree = false;
  bool pass = false;
};

/// Eigenvalue trajectory of the central approximation on the growing
/// representations, via the character route, cross-checked against the
/// power-sum route; certifies the 1/n rate.
PipelineReport eigenPipeline(long k, const Partition& la, std::vector<long> schedule);
PipelineReport eigenPipelineWreath(long k, const Multipartition& bla,
                                   std::vector<long> schedule);

std::vector<long> defaultSchedule();  // {8,12,18,27,40}

/// Running-max stabilization: the max over the second half must not exceed
/// 1.1x the max over the first half.
bool rateStabilizes(const std::vector<Rat>& scaledGaps);
bool rateStabilizesF(const std::vector<double>& scaledGaps, double floor);

std::string toJsonText(const LimitCertificate&);
std::string toJsonText(const CompressionReport&);
std::string toJsonText(const PipelineReport&);

}  // namespace rookalg
