#include "fsusy/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsusy {

Matrix diagonal(const RealVector& entries) {
  Matrix m = zeros(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    m(idx, idx) = Scalar(entries[i], 0);
  }
  return m;
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix power(const Matrix& m, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("power: negative exponent");
  }
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < exponent; ++i) {
    result = result * m;
  }
  return result;
}

Real max_abs(const Matrix& m) {
  Real best = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      best = std::max(best, std::abs(m(i, j)));
    }
  }
  return best;
}

Real max_abs_leading(const Matrix& m, std::size_t bound) {
  const auto b = std::min<Eigen::Index>(static_cast<Eigen::Index>(bound), std::min(m.rows(), m.cols()));
  Real best = 0;
  for (Eigen::Index j = 0; j < b; ++j) {
    for (Eigen::Index i = 0; i < b; ++i) {
      best = std::max(best, std::abs(m(i, j)));
    }
  }
  return best;
}

RealVector real_diagonal(const Matrix& m) {
  RealVector out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out[static_cast<std::size_t>(i)] = m(i, i).real();
  }
  return out;
}

}  // namespace fsusy
