#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace confact {

using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

namespace detail {

inline Eigen::JacobiSVD<MatX> svd(const MatX& m, unsigned options) {
  return Eigen::JacobiSVD<MatX>(m, options);
}

// Number of singular values above tol * reference; reference defaults to the
// largest one, and nothing survives when that is itself below tol.
inline int count_significant(const VecX& sv, double tol, double reference = -1.0) {
  if (sv.size() == 0) return 0;
  const double top = sv(0);
  if (!(top > tol)) return 0;
  const double cut = tol * (reference > 0.0 ? reference : top);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

}  // namespace detail

/**
 * @brief Numerical rank of a matrix.
 *
 * Counts singular values above `tol * sigma_max`. When `sigma_max <= tol`
 * every value is treated as noise and the rank is 0.
 */
inline int numerical_rank(const MatX& m, double tol) {
  if (m.size() == 0) return 0;
  return detail::count_significant(detail::svd(m, 0).singularValues(), tol);
}

/// Rank with singular values compared against `tol * reference` instead of the largest one.
inline int numerical_rank(const MatX& m, double tol, double reference) {
  if (m.size() == 0) return 0;
  return detail::count_significant(detail::svd(m, 0).singularValues(), tol, reference);
}

/// Stacks vectors as rows.
inline MatX stack_rows(std::span<const VecX> vectors) {
  if (vectors.empty()) return MatX(0, 0);
  MatX m(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return m;
}

inline int subspace_rank(std::span<const VecX> vectors, double tol) {
  if (vectors.empty()) return 0;
  return numerical_rank(stack_rows(vectors), tol);
}

/// Orthonormal basis (as columns) of the span of the columns of `m`.
inline MatX column_space(const MatX& m, double tol, double reference = -1.0) {
  if (m.size() == 0) return MatX(m.rows(), 0);
  auto s = detail::svd(m, Eigen::ComputeThinU);
  const int r = detail::count_significant(s.singularValues(), tol, reference);
  return s.matrixU().leftCols(r);
}

/// Orthonormal basis (as columns) of the kernel of `m`.
inline MatX null_space(const MatX& m, double tol, double reference = -1.0) {
  const auto n = m.cols();
  if (m.rows() == 0) return MatX::Identity(n, n);
  auto s = detail::svd(m, Eigen::ComputeFullV);
  const int r = detail::count_significant(s.singularValues(), tol, reference);
  return s.matrixV().rightCols(n - r);
}

/**
 * @brief Sine of the largest principal angle between two column spaces.
 *
 * Both inputs must have orthonormal columns. Subspaces of different
 * dimension are at distance 1.
 */
inline double subspace_distance(const MatX& q1, const MatX& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const MatX residual = q2 - q1 * (q1.transpose() * q2);
  return detail::svd(residual, 0).singularValues()(0);
}

/// Relative distance of `v` from the column space of orthonormal `q`.
inline double distance_from_span(const MatX& q, const VecX& v) {
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  const VecX r = q.cols() == 0 ? v : VecX(v - q * (q.transpose() * v));
  return r.norm() / n;
}

}  // namespace confact
