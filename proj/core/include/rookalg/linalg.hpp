#pragma once

#include <vector>

#include "rookalg/rational.hpp"

namespace rookalg {

/// Dense exact-rational matrix, row major.
class RatMat {
 public:
  RatMat() = default;
  RatMat(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rat& at(long i, long j) { return data_[i * cols_ + j]; }
  const Rat& at(long i, long j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMat& other) const = default;

  RatMat operator+(const RatMat&) const;
  RatMat operator-(const RatMat&) const;
  RatMat operator*(const RatMat&) const;
  RatMat scaled(const Rat&) const;
  void addScaled(const RatMat& other, const Rat& c);  // *this += c * other

  bool isZero() const;
  bool isScalar(Rat* value = nullptr) const;  // value * identity
  Rat trace() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Dense double matrix, row major.
class FloatMat {
 public:
  FloatMat() = default;
  FloatMat(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  static FloatMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  double& at(long i, long j) { return data_[i * cols_ + j]; }
  double at(long i, long j) const { return data_[i * cols_ + j]; }

  FloatMat operator+(const FloatMat&) const;
  FloatMat operator-(const FloatMat&) const;
  FloatMat operator*(const FloatMat&) const;
  void addScaled(const FloatMat& other, double c);
  FloatMat transposed() const;

  double maxAbs() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Spectral norm by power iteration on M^T M; relative tolerance on the
/// dominant eigenvalue.
double spectralNorm(const FloatMat& m, double tol = 1e-10);

/// Kernel basis of a (rows x cols) system: vectors v with A v = 0.
std::vector<std::vector<Rat>> kernelBasis(RatMat a);

/// Solves A x = b exactly; empty result if inconsistent or underdetermined.
std::vector<Rat> solveLinear(RatMat a, std::vector<Rat> b);

}  // namespace rookalg
