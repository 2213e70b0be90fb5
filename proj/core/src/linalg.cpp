#include "rookalg/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace rookalg {

RatMat RatMat::identity(long n) {
  RatMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  Rat tmp;
  for (long i = 0; i < rows_; ++i) {
    for (long k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b == 0) continue;
        tmp = a * b;
        r.at(i, j) += tmp;
      }
    }
  }
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

void RatMat::addScaled(const RatMat& other, const Rat& c) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (other.data_[i] != 0) data_[i] += c * other.data_[i];
}

bool RatMat::isZero() const {
  for (const Rat& v : data_)
    if (v != 0) return false;
  return true;
}

bool RatMat::isScalar(Rat* value) const {
  if (rows_ != cols_) return false;
  if (rows_ == 0) {
    if (value) *value = 0;
    return true;
  }
  const Rat& c = at(0, 0);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (i == j) {
        if (at(i, j) != c) return false;
      } else if (at(i, j) != 0) {
        return false;
      }
    }
  if (value) *value = c;
  return true;
}

Rat RatMat::trace() const {
  Rat t = 0;
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

FloatMat FloatMat::identity(long n) {
  FloatMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

FloatMat FloatMat::operator+(const FloatMat& o) const {
  FloatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

FloatMat FloatMat::operator-(const FloatMat& o) const {
  FloatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

FloatMat FloatMat::operator*(const FloatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  FloatMat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      double a = at(i, k);
      if (a == 0.0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

void FloatMat::addScaled(const FloatMat& other, double c) {
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += c * other.data_[i];
}

FloatMat FloatMat::transposed() const {
  FloatMat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

double FloatMat::maxAbs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

double spectralNorm(const FloatMat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  FloatMat b = m.transposed() * m;  // PSD, dominant eigenvalue = norm^2
  long n = b.rows();
  std::vector<double> v(n);
  for (long i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
  double prev = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    std::vector<double> w(n, 0.0);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) w[i] += b.at(i, j) * v[j];
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    double eig = 0.0;
    for (long i = 0; i < n; ++i) eig += v[i] * w[i];
    for (long i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (iter > 4 && std::fabs(eig - prev) <= tol * std::max(1.0, std::fabs(eig))) {
      return std::sqrt(std::max(0.0, eig));
    }
    prev = eig;
  }
  return std::sqrt(std::max(0.0, prev));
}

namespace {

// Row-reduces in place; returns pivot column per reduced row.
std::vector<long> rowReduce(RatMat& a) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
    long sel = -1;
    for (long i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (long j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    Rat inv = 1 / a.at(row, col);
    for (long j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (long i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const Rat f = a.at(i, col);
      if (f == 0) continue;
      for (long j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernelBasis(RatMat a) {
  long cols = a.cols();
  std::vector<long> pivots = rowReduce(a);
  std::vector<bool> isPivot(cols, false);
  for (long p : pivots) isPivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (long freeCol = 0; freeCol < cols; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<Rat> v(cols);
    v[freeCol] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(static_cast<long>(r), freeCol);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> solveLinear(RatMat a, std::vector<Rat> b) {
  if (a.rows() != static_cast<long>(b.size()))
    throw std::invalid_argument("solveLinear shape mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  // Eliminate on the coefficient columns only.
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < a.cols() && row < aug.rows(); ++col) {
    long sel = -1;
    for (long i = row; i < aug.rows(); ++i)
      if (aug.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (long j = 0; j <= a.cols(); ++j) std::swap(aug.at(sel, j), aug.at(row, j));
    Rat inv = 1 / aug.at(row, col);
    for (long j = col; j <= a.cols(); ++j) aug.at(row, j) *= inv;
    for (long i = 0; i < aug.rows(); ++i) {
      if (i == row) continue;
      const Rat f = aug.at(i, col);
      if (f == 0) continue;
      for (long j = col; j <= a.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (static_cast<long>(pivots.size()) < a.cols()) return {};  // underdetermined
  for (long i = row; i < aug.rows(); ++i)
    if (aug.at(i, a.cols()) != 0) return {};  // inconsistent
  std::vector<Rat> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<long>(r), a.cols());
  return x;
}

}  // namespace rookalg
