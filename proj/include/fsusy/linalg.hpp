#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace fsusy {

// Operators are held in extended precision: degree-k products of shift
// operators reach magnitudes near 1e10 at D = 32, k = 6, where double
// roundoff alone exceeds the 1e-10 identity tolerance.
using Real = long double;
using Scalar = std::complex<Real>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = std::vector<Real>;

inline Matrix identity(std::size_t dim) {
  return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

inline Matrix zeros(std::size_t dim) {
  return Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Matrix diagonal(const RealVector& entries);

Matrix dagger(const Matrix& m);

Matrix power(const Matrix& m, int exponent);

// Max-norm over the whole matrix.
Real max_abs(const Matrix& m);

// Max-norm over the leading block [0, bound) x [0, bound).
Real max_abs_leading(const Matrix& m, std::size_t bound);

// Real parts of the diagonal.
RealVector real_diagonal(const Matrix& m);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace fsusy
