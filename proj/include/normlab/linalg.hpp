#pragma once

#include <Eigen/Dense>
#include <vector>

#include "normlab/errors.hpp"
#include "normlab/scalar.hpp"

namespace normlab {

inline Eigen::VectorXcd to_eigen(const std::vector<Scalar>& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<std::size_t>(i)];
  return out;
}

inline std::vector<Scalar> from_eigen(const Eigen::VectorXcd& v) {
  std::vector<Scalar> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v[i];
  return out;
}

// Columns of the result are the given vectors.
inline Eigen::MatrixXcd columns_matrix(const std::vector<std::vector<Scalar>>& cols, int dim) {
  Eigen::MatrixXcd m(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < dim; ++i) m(i, static_cast<Eigen::Index>(j)) = cols[j][static_cast<std::size_t>(i)];
  return m;
}

// Rank test used for basis/spanning checks: normalize each column to unit
// Euclidean length, then count singular values above tol.
inline int numeric_rank(Eigen::MatrixXcd m, double tol = 1e-9) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double n = m.col(j).norm();
    if (n > 0.0) m.col(j) /= n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++rank;
  return rank;
}

inline bool linearly_independent(const Eigen::MatrixXcd& m, double tol = 1e-9) {
  return numeric_rank(m, tol) == m.cols();
}

// Least-squares membership test: z is in the column span of b when the
// residual is below tol relative to max(1, |z|).
inline bool in_span(const Eigen::MatrixXcd& b, const Eigen::VectorXcd& z, double tol = 1e-9) {
  if (b.cols() == 0) return z.norm() <= tol;
  Eigen::VectorXcd s = b.colPivHouseholderQr().solve(z);
  double resid = (b * s - z).norm();
  return resid <= tol * std::max(1.0, z.norm());
}

// Positive-definiteness of a Hermitian matrix (all Cholesky pivots above tol).
inline bool hermitian_positive_definite(const Eigen::MatrixXcd& g, double tol = 1e-9) {
  if (g.rows() != g.cols()) return false;
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, g.cwiseAbs().maxCoeff()))
    return false;
  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() != Eigen::Success) return false;
  Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal().real();
  return (diag.array() > tol).all();
}

// Real quadratic form sqrt(v^H G v) for Hermitian positive definite G.
inline double ellipsoid_length(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& v) {
  double q = (v.adjoint() * g * v).value().real();
  return std::sqrt(std::max(q, 0.0));
}

// Realification of C^n as R^{2n}: v maps to (Re v; Im v).
inline Eigen::VectorXd realify(const Eigen::VectorXcd& v) {
  Eigen::VectorXd out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

// The real symmetric Gram matrix representing v^H G v on R^{2n}:
// for G = S + iA it is [[S, -A], [A, S]].
inline Eigen::MatrixXd realify_gram(const Eigen::MatrixXcd& g) {
  Eigen::Index n = g.rows();
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = g.real();
  out.topRightCorner(n, n) = -g.imag();
  out.bottomLeftCorner(n, n) = g.imag();
  out.bottomRightCorner(n, n) = g.real();
  return out;
}

}  // namespace normlab
