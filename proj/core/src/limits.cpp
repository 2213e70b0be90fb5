#include "rookalg/limits.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rookalg {

namespace {

Rat powRat(const Rat& base, long e) {
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

SequenceFamily SequenceFamily::stable(AlgebraElement x, int m) {
  SequenceFamily f;
  f.kind_ = Kind::Stable;
  f.group_ = x.group();
  f.m_ = std::max(m, x.size());
  f.degreeBound_ = x.degree().value_or(0);
  f.hint_ = {0, 0};
  f.payload_ = std::move(x);
  return f;
}

SequenceFamily SequenceFamily::epsApprox(int i, int m, const FiniteGroupTable* group) {
  if (i < 1 || i > m) throw std::invalid_argument("epsApprox requires 1 <= i <= m");
  SequenceFamily f;
  f.kind_ = Kind::EpsApprox;
  f.group_ = group;
  f.m_ = m;
  f.i_ = i;
  f.degreeBound_ = 2;
  f.hint_ = {1, 1};
  return f;
}

SequenceFamily SequenceFamily::alpha(long k) {
  if (k < 1) throw std::invalid_argument("alpha requires k >= 1");
  SequenceFamily f;
  f.kind_ = Kind::Alpha;
  f.group_ = &FiniteGroupTable::trivialGroup();
  f.m_ = 0;
  f.k_ = k;
  f.degreeBound_ = 2 * k;
  f.hint_ = {2 * k, 2 * k};
  return f;
}

SequenceFamily SequenceFamily::alphaWreath(long k, const FiniteGroupTable* group) {
  if (k < 1) throw std::invalid_argument("alpha requires k >= 1");
  SequenceFamily f;
  f.kind_ = Kind::AlphaWreath;
  f.group_ = group;
  f.m_ = 0;
  f.k_ = k;
  f.degreeBound_ = 2 * k;
  f.hint_ = {2 * k, 2 * k};
  return f;
}

SequenceFamily SequenceFamily::lift(ShiftedFunction fn, const FiniteGroupTable* group,
                                    CoefficientHint hint, int level) {
  SequenceFamily f;
  f.kind_ = Kind::Lift;
  f.group_ = group;
  f.m_ = level;
  f.degreeBound_ = fn.degreeBound();
  f.hint_ = hint;
  f.fnText_ = fn.str();
  f.poly_ = expressInPsharp(fn, group->trivial() ? nullptr : group);
  return f;
}

SequenceFamily SequenceFamily::shiftedCopy(int steps, SequenceFamily inner) {
  if (steps < 1) throw std::invalid_argument("shiftedCopy requires steps >= 1");
  SequenceFamily f;
  f.kind_ = Kind::Shifted;
  f.group_ = inner.group();
  f.m_ = inner.level() + steps;
  f.degreeBound_ = inner.degreeBound();
  f.hint_ = inner.hint();
  f.steps_ = steps;
  f.inner_ = std::make_shared<SequenceFamily>(std::move(inner));
  return f;
}

std::string SequenceFamily::name() const {
  switch (kind_) {
    case Kind::Stable:
      return "stable(" + payload_->str() + ")";
    case Kind::EpsApprox:
      return "epsApprox(i=" + std::to_string(i_) + ",m=" + std::to_string(m_) + ")";
    case Kind::Alpha:
      return "alpha(k=" + std::to_string(k_) + ")";
    case Kind::AlphaWreath:
      return "alphaWreath(k=" + std::to_string(k_) + "," + group_->name + ")";
    case Kind::Lift:
      return "lift(" + fnText_ + ")";
    case Kind::Shifted:
      return "shift^" + std::to_string(steps_) + "(" + inner_->name() + ")";
  }
  return "?";
}

long SequenceFamily::firstSample(int r) const {
  switch (kind_) {
    case Kind::Stable:
      return std::max<long>(r, payload_->size());
    case Kind::EpsApprox:
      return std::max<long>({static_cast<long>(r), static_cast<long>(m_) + 1}) + 1;
    case Kind::Alpha:
    case Kind::AlphaWreath:
      return r + 2 * k_ + 2;
    case Kind::Lift:
      return r + degreeBound_ + 2;
    case Kind::Shifted:
      return inner_->firstSample(std::max(r - steps_, 0)) + steps_;
  }
  return r;
}

bool SequenceFamily::groupAlgebraValued() const {
  if (kind_ != Kind::Stable) return true;
  for (const auto& [m, c] : payload_->terms())
    if (!m.isGroupElement()) return false;
  return true;
}

AlgebraElement SequenceFamily::eval(long n) const {
  switch (kind_) {
    case Kind::Stable: {
      if (n < payload_->size())
        throw std::invalid_argument("stable family evaluated below its base size");
      return payload_->embedded(static_cast<int>(n));
    }
    case Kind::EpsApprox: {
      if (n <= m_) throw std::invalid_argument("epsApprox needs n > m");
      AlgebraElement sum(static_cast<int>(n), group_);
      for (long j = m_ + 1; j <= n; ++j)
        sum.add(MonomialMatrix::transposition(i_, static_cast<int>(j), static_cast<int>(n),
                                              group_),
                Rat(1, n - m_));  // canonical: unit numerator
      return sum;
    }
    case Kind::Alpha:
      return hstarCentralApprox(k_, static_cast<int>(n));
    case Kind::AlphaWreath:
      return hstarCentralApproxWreath(k_, static_cast<int>(n), group_);
    case Kind::Lift:
      return liftPsharp(*poly_, static_cast<int>(n), group_);
    case Kind::Shifted: {
      AlgebraElement x = inner_->eval(n - steps_);
      for (int s = 0; s < steps_; ++s) x = x.shifted();
      return x;
    }
  }
  throw std::logic_error("unknown family kind");
}

Rat RationalFit::evalAt(long n) const {
  Rat p = 0, q = 0, pw = 1;
  for (size_t t = 0; t < std::max(num.size(), den.size()); ++t) {
    if (t < num.size()) p += num[t] * pw;
    if (t < den.size()) q += den[t] * pw;
    pw *= n;
  }
  if (q == 0) throw LimitError("rational fit evaluated at a pole");
  return p / q;
}

long RationalFit::numDegree() const {
  for (long t = static_cast<long>(num.size()) - 1; t >= 0; --t)
    if (num[t] != 0) return t;
  return -1;
}

long RationalFit::denDegree() const {
  for (long t = static_cast<long>(den.size()) - 1; t >= 0; --t)
    if (den[t] != 0) return t;
  return -1;
}

Rat RationalFit::limit() const {
  long dn = numDegree(), dd = denDegree();
  if (dn < 0) return 0;
  if (dn > dd) throw LimitError("divergent coefficient");
  if (dn < dd) return 0;
  return num[dn] / den[dd];
}

std::string RationalFit::str() const {
  auto poly = [](const std::vector<Rat>& c) {
    std::ostringstream out;
    bool first = true;
    for (size_t t = 0; t < c.size(); ++t) {
      if (c[t] == 0) continue;
      if (!first) out << " + ";
      first = false;
      out << ratStr(c[t]);
      if (t >= 1) out << "*n";
      if (t >= 2) out << "^" << t;
    }
    if (first) out << "0";
    return out.str();
  };
  return "(" + poly(num) + ") / (" + poly(den) + ")";
}

namespace {

RationalFit fitCoefficient(const std::vector<long>& points, const std::vector<Rat>& values,
                           long numDeg, long denDeg) {
  long cols = numDeg + 1 + denDeg + 1;
  RatMat a(static_cast<long>(points.size()), cols);
  for (size_t s = 0; s < points.size(); ++s) {
    Rat pw = 1;
    for (long t = 0; t <= numDeg; ++t) {
      a.at(s, t) = pw;
      pw *= points[s];
    }
    pw = 1;
    for (long t = 0; t <= denDeg; ++t) {
      a.at(s, numDeg + 1 + t) = -values[s] * pw;
      pw *= points[s];
    }
  }
  auto kernel = kernelBasis(std::move(a));
  if (kernel.empty()) throw LimitError("no rational-function fit for a coefficient");
  RationalFit fit;
  fit.num.assign(kernel[0].begin(), kernel[0].begin() + numDeg + 1);
  fit.den.assign(kernel[0].begin() + numDeg + 1, kernel[0].end());
  if (fit.denDegree() < 0) throw LimitError("degenerate rational-function fit");
  return fit;
}

}  // namespace

TruncationLimitResult truncationLimit(const SequenceFamily& family, int r) {
  TruncationLimitResult out{AlgebraElement(r, family.group()), {}};
  if (family.stableKind()) {
    out.limit = family.eval(family.firstSample(r)).truncated(r);
    out.certificate.mode = "stable";
    return out;
  }
  CoefficientHint hint = family.hint();
  long count = hint.numDeg + hint.denDeg + 2;
  long n0 = family.firstSample(r);
  std::vector<long> samples, validation;
  for (long s = 0; s < count; ++s) samples.push_back(n0 + s);
  validation = {n0 + count, n0 + count + 1};

  std::vector<AlgebraElement> truncated;
  for (long n : samples) truncated.push_back(family.eval(n).truncated(r));
  std::vector<AlgebraElement> check;
  for (long n : validation) check.push_back(family.eval(n).truncated(r));

  std::set<MonomialMatrix> keys;
  for (const auto& x : truncated)
    for (const auto& [m, c] : x.terms()) keys.insert(m);
  for (const auto& x : check)
    for (const auto& [m, c] : x.terms()) keys.insert(m);

  out.certificate.mode = "rational-fit";
  out.certificate.samplePoints = samples;
  out.certificate.validationPoints = validation;
  for (const MonomialMatrix& key : keys) {
    std::vector<Rat> values;
    for (const auto& x : truncated) values.push_back(x.coeff(key));
    RationalFit fit = fitCoefficient(samples, values, hint.numDeg, hint.denDeg);
    for (size_t v = 0; v < validation.size(); ++v) {
      if (fit.evalAt(validation[v]) != check[v].coeff(key))
        throw LimitError("fit validation failure at n=" + std::to_string(validation[v]) +
                         " for monomial " + key.str());
    }
    Rat lim;
    try {
      lim = fit.limit();
    } catch (const LimitError&) {
      throw LimitError("divergent coefficient for monomial " + key.str() + ": " + fit.str());
    }
    if (lim != 0) out.limit.add(key, lim);
    out.certificate.fits.emplace_back(key.str(), std::move(fit));
  }
  return out;
}

TruncationLimitResult truncationLimitCauchy(const SequenceFamily& family, int r,
                                            const std::vector<long>& schedule, double tol) {
  if (schedule.size() < 2) throw std::invalid_argument("cauchy mode needs >= 2 points");
  TruncationLimitResult out{AlgebraElement(r, family.group()), {}};
  out.certificate.mode = "cauchy";
  out.certificate.tolerance = tol;
  std::vector<AlgebraElement> values;
  for (long n : schedule) {
    values.push_back(family.eval(n).truncated(r));
    out.certificate.samplePoints.push_back(n);
  }
  for (size_t s = 1; s < values.size(); ++s) {
    AlgebraElement diff = values[s] - values[s - 1];
    double d = 0;
    for (const auto& [m, c] : diff.terms()) d = std::max(d, std::fabs(c.get_d()));
    out.certificate.cauchyDiffs.push_back(d);
  }
  if (out.certificate.cauchyDiffs.back() > tol)
    throw LimitError("sequence is not Cauchy at the scheduled tolerance");
  out.limit = values.back();
  return out;
}

WindowElement::WindowElement(int m, const FiniteGroupTable* group,
                             std::vector<AlgebraElement> levels, long degreeBound)
    : m_(m), group_(group), levels_(std::move(levels)), degreeBound_(degreeBound) {
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].group() != group_) throw std::invalid_argument("window group mismatch");
    if (i > 0 && levels_[i].size() != levels_[i - 1].size() + 1)
      throw std::invalid_argument("window sizes must be consecutive");
  }
  if (levels_.empty()) throw std::invalid_argument("empty window");
}

const AlgebraElement& WindowElement::at(int r) const {
  int low = lowSize();
  if (r < low || r > highSize()) throw std::invalid_argument("window level out of range");
  return levels_[r - low];
}

void WindowElement::validate() const {
  for (size_t i = 0; i + 1 < levels_.size(); ++i) {
    if (levels_[i + 1].truncated(levels_[i].size()) != levels_[i])
      throw std::runtime_error("window is not truncation-consistent at size " +
                               std::to_string(levels_[i + 1].size()));
  }
  for (const AlgebraElement& b : levels_) {
    if (b.degree().value_or(-1) > degreeBound_)
      throw std::runtime_error("window degree bound exceeded at size " +
                               std::to_string(b.size()));
    if (b.size() > m_) {
      CentralizerWitness w =
          isInCentralizer(b, CentralizerSpec{m_, CentralizerSpec::Flavor::Semigroup});
      if (!w.inCentralizer)
        throw std::runtime_error("window level " + std::to_string(b.size()) +
                                 " is not in the centralizer; witness " + w.generator->str());
    }
  }
}

WindowElement WindowElement::shiftedCopy() const {
  std::vector<AlgebraElement> shifted;
  for (const AlgebraElement& b : levels_) shifted.push_back(b.shifted());
  return WindowElement(m_ + 1, group_, std::move(shifted), degreeBound_);
}

WindowElement WindowElement::operator+(const WindowElement& o) const {
  int low = std::max(lowSize(), o.lowSize());
  int high = std::min(highSize(), o.highSize());
  if (low > high) throw std::invalid_argument("windows do not overlap");
  std::vector<AlgebraElement> levels;
  for (int r = low; r <= high; ++r) levels.push_back(at(r) + o.at(r));
  return WindowElement(std::max(m_, o.m_), group_, std::move(levels),
                       std::max(degreeBound_, o.degreeBound_));
}

WindowElement WindowElement::operator-(const WindowElement& o) const {
  return *this + o.scaled(-1);
}

WindowElement WindowElement::scaled(const Rat& c) const {
  std::vector<AlgebraElement> levels;
  for (const AlgebraElement& b : levels_) levels.push_back(b.scaled(c));
  return WindowElement(m_, group_, std::move(levels), degreeBound_);
}

bool WindowElement::operator==(const WindowElement& o) const {
  return m_ == o.m_ && group_ == o.group_ && levels_ == o.levels_;
}

WindowElement assembleWindow(const SequenceFamily& family, int R) {
  int r0 = std::max(family.level(), 1);
  if (R < r0) throw std::invalid_argument("window upper size below the family level");
  std::vector<AlgebraElement> levels;
  for (int r = r0; r <= R; ++r) {
    try {
      levels.push_back(truncationLimit(family, r).limit);
    } catch (const LimitError& e) {
      throw LimitError("window assembly failed at r=" + std::to_string(r) + ": " + e.what());
    }
  }
  WindowElement w(family.level(), family.group(), std::move(levels), family.degreeBound());
  w.validate();
  return w;
}

WindowElement rookCycleSumWindow(long k, int R, const FiniteGroupTable* group,
                                 const std::vector<Rat>& phiByClass) {
  std::vector<AlgebraElement> levels;
  for (int r = 1; r <= R; ++r) levels.push_back(rookCycleSumPhi(k, r, group, phiByClass));
  return WindowElement(0, group, std::move(levels), std::max(k, 1L));
}

WindowElement jucysMurphyWindow(int i, int R, const FiniteGroupTable* group) {
  std::vector<AlgebraElement> levels;
  for (int r = i; r <= R; ++r) levels.push_back(jucysMurphy(i, r, group));
  return WindowElement(i, group, std::move(levels), 2);
}

WindowElement stableWindow(const AlgebraElement& x, int m, int R) {
  std::vector<AlgebraElement> levels;
  int r0 = std::max({m, x.size(), 1});
  for (int r = r0; r <= R; ++r) levels.push_back(x.embedded(r));
  return WindowElement(std::max(m, x.size()), x.group(), std::move(levels),
                       x.degree().value_or(0));
}

CompressionReport compressionExperiment(const SequenceFamily& family, const Partition& la,
                                        int r, const std::vector<long>& schedule, double tol) {
  CompressionReport report;
  report.family = family.name();
  report.lambda = la.str();
  report.r = r;
  report.tolerance = tol;
  const FiniteGroupTable* g = family.group();
  if (!g->trivial())
    throw std::invalid_argument("compression experiments use the trivial group");
  AlgebraElement br = truncationLimit(family, r).limit;
  RookRepF small(la, r, g);
  FloatMat tr = small.apply(br);
  for (long n : schedule) {
    if (n < r || n < la.size()) continue;
    RookRepF big(la, static_cast<int>(n), g);
    FloatMat act = big.apply(family.eval(n));
    FloatMat proj = big.compression(r);
    FloatMat gap = embedRookMatrix(small, big, tr) - proj * act * proj;
    double e = spectralNorm(gap);
    report.schedule.push_back(n);
    report.errors.push_back(e);
  }
  std::vector<double> scaled;
  for (size_t i = 0; i < report.errors.size(); ++i)
    scaled.push_back(static_cast<double>(report.schedule[i]) * report.errors[i]);
  report.fittedC = scaled.empty() ? 0.0 : *std::max_element(scaled.begin(), scaled.end());
  if (family.stableKind()) {
    report.pass = true;
    for (double e : report.errors)
      if (e > tol) report.pass = false;
  } else {
    report.pass = rateStabilizesF(scaled, tol);
  }
  return report;
}

PipelineReport eigenPipeline(long k, const Partition& la, std::vector<long> schedule) {
  PipelineReport report;
  report.k = k;
  report.shape = la.str();
  report.target = evalHstar(k, la);
  report.routesAgree = true;
  for (long n : schedule) {
    if (n < la.size() + la.part(1) || n < 1) continue;
    Rat viaCharacters = 0;
    for (long i = 0; i <= k; ++i) {
      Rat c = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
      if (i % 2) c = -c;
      viaCharacters += c * frakpExpansion(k + i).eval(lambdaBracket(la, n));
    }
    Rat viaPowerSums = hstarApprox(k, la, n);
    if (viaCharacters != viaPowerSums) report.routesAgree = false;
    report.schedule.push_back(n);
    report.values.push_back(viaCharacters);
    Rat gap = viaCharacters - report.target;
    if (gap < 0) gap = -gap;
    report.scaledGaps.push_back(Rat(n) * gap);
  }
  report.pass = report.routesAgree && rateStabilizes(report.scaledGaps);
  return report;
}

PipelineReport eigenPipelineWreath(long k, const Multipartition& bla,
                                   std::vector<long> schedule) {
  PipelineReport report;
  report.k = k;
  report.shape = bla.str();
  report.target = evalHstarWreath(k, bla);
  report.routesAgree = true;
  for (long n : schedule) {
    if (n - bla.norm() < bla.at(0).part(1) || n < 1) continue;
    Partition grown = mpBracket(bla, n).at(0);
    Rat viaCharacters = 0;
    for (long i = 0; i <= k; ++i) {
      Rat c = Rat(binomialInt(k, i)) / powRat(Rat(n), i);
      if (i % 2) c = -c;
      viaCharacters += c * frakpExpansion(k + i).eval(grown);
    }
    Rat viaPowerSums = hstarApproxWreath(k, bla, n);
    if (viaCharacters != viaPowerSums) report.routesAgree = false;
    report.schedule.push_back(n);
    report.values.push_back(viaCharacters);
    Rat gap = viaCharacters - report.target;
    if (gap < 0) gap = -gap;
    report.scaledGaps.push_back(Rat(n) * gap);
  }
  report.pass = report.routesAgree && rateStabilizes(report.scaledGaps);
  return report;
}

std::vector<long> defaultSchedule() { return {8, 12, 18, 27, 40}; }

bool rateStabilizes(const std::vector<Rat>& scaledGaps) {
  if (scaledGaps.size() < 4) return false;
  size_t half = scaledGaps.size() / 2;
  Rat c1 = 0, c2 = 0;
  for (size_t i = 0; i < half; ++i) c1 = std::max(c1, scaledGaps[i]);
  for (size_t i = half; i < scaledGaps.size(); ++i) c2 = std::max(c2, scaledGaps[i]);
  return c2 * 10 <= c1 * 11;
}

bool rateStabilizesF(const std::vector<double>& scaledGaps, double floor) {
  if (scaledGaps.size() < 4) return false;
  size_t half = scaledGaps.size() / 2;
  double c1 = 0, c2 = 0;
  for (size_t i = 0; i < half; ++i) c1 = std::max(c1, scaledGaps[i]);
  for (size_t i = half; i < scaledGaps.size(); ++i) c2 = std::max(c2, scaledGaps[i]);
  return c2 <= c1 * 1.1 + floor;
}

std::string toJsonText(const LimitCertificate& cert) {
  nlohmann::ordered_json j;
  j["type"] = cert.mode;
  j["sample_points"] = cert.samplePoints;
  j["validation"] = cert.validationPoints;
  if (!cert.fits.empty()) {
    nlohmann::ordered_json fits = nlohmann::ordered_json::object();
    for (const auto& [key, fit] : cert.fits) fits[key] = fit.str();
    j["coefficient_fits"] = fits;
  }
  if (!cert.cauchyDiffs.empty()) {
    j["cauchy_diffs"] = cert.cauchyDiffs;
    j["tolerance"] = cert.tolerance;
  }
  return j.dump();
}

std::string toJsonText(const CompressionReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "compression";
  j["family"] = r.family;
  j["lambda"] = r.lambda;
  j["r"] = r.r;
  j["schedule"] = r.schedule;
  j["values"] = r.errors;
  j["fitted_C"] = r.fittedC;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j.dump();
}

std::string toJsonText(const PipelineReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "eigen-pipeline";
  j["k"] = r.k;
  j["shape"] = r.shape;
  j["schedule"] = r.schedule;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const Rat& v : r.values) vals.push_back(ratStr(v));
  j["values"] = vals;
  j["target"] = ratStr(r.target);
  nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
  for (const Rat& v : r.scaledGaps) gaps.push_back(ratStr(v));
  j["scaled_gaps"] = gaps;
  j["routes_agree"] = r.routesAgree;
  j["pass"] = r.pass;
  return j.dump();
}

}  // namespace rookalg
