#pragma once

#include <array>
#include <cmath>
#include <span>
#include <utility>

#include "confact/core.hpp"
#include "confact/expm.hpp"
#include "confact/linalg.hpp"

namespace confact {

/// Coordinates of so(1,4): four boost entries m(0,j), then six rotation entries m(i,j), 1 ≤ i < j ≤ 4.
using LorentzCoords = Eigen::Matrix<double, 10, 1>;

/// Gram matrix diag(-1, 1, 1, 1, 1) of the signature-(1,4) form.
inline Mat5 minkowski_gram() {
  Mat5 j = Mat5::Identity();
  j(0, 0) = -1.0;
  return j;
}

/// Polarized quadratic form: q(v, w) = -v₁w₁ + v₂w₂ + v₃w₃ + v₄w₄ + v₅w₅.
inline double q_form(const Vec5& v, const Vec5& w) {
  return -v(0) * w(0) + v.tail<4>().dot(w.tail<4>());
}
inline double q_form(const Vec5& v) { return q_form(v, v); }

/// Linear isometry of R^{1,4}: mᵀJm = J.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Mat5::Identity()) {}

  explicit LorentzMatrix(const Mat5& m, double eps = Tolerances{}.eps) : m_(m) {
    const Mat5 j = minkowski_gram();
    if ((m.transpose() * j * m - j).norm() > eps * std::max(1.0, m.squaredNorm()))
      throw Error(ErrorCode::InvariantViolation, "matrix does not preserve the Lorentzian form");
  }

  static LorentzMatrix unchecked(const Mat5& m) {
    LorentzMatrix g;
    g.m_ = m;
    return g;
  }

  const Mat5& matrix() const { return m_; }
  LorentzMatrix operator*(const LorentzMatrix& o) const { return unchecked(m_ * o.m_); }

 private:
  Mat5 m_;
};

/// Element of so(1,4): mᵀJ + Jm = 0.
class LorentzAlgElement {
 public:
  LorentzAlgElement() : m_(Mat5::Zero()) {}

  explicit LorentzAlgElement(const Mat5& m, double eps = Tolerances{}.eps) : m_(m) {
    const Mat5 j = minkowski_gram();
    if ((m.transpose() * j + j * m).norm() > eps * std::max(1.0, m.norm()))
      throw Error(ErrorCode::InvariantViolation, "matrix is not in so(1,4)");
  }

  static LorentzAlgElement unchecked(const Mat5& m) {
    LorentzAlgElement x;
    x.m_ = m;
    return x;
  }

  static LorentzAlgElement from_coords(const LorentzCoords& c) {
    Mat5 m = Mat5::Zero();
    for (int j = 1; j < 5; ++j) {
      m(0, j) = c(j - 1);
      m(j, 0) = c(j - 1);
    }
    int k = 4;
    for (int i = 1; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++k) {
        m(i, j) = c(k);
        m(j, i) = -c(k);
      }
    return unchecked(m);
  }

  LorentzCoords coords() const {
    LorentzCoords c;
    for (int j = 1; j < 5; ++j) c(j - 1) = m_(0, j);
    int k = 4;
    for (int i = 1; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++k) c(k) = m_(i, j);
    return c;
  }

  const Mat5& matrix() const { return m_; }

  LorentzAlgElement operator+(const LorentzAlgElement& o) const { return unchecked(m_ + o.m_); }
  LorentzAlgElement operator-(const LorentzAlgElement& o) const { return unchecked(m_ - o.m_); }
  LorentzAlgElement operator*(double s) const { return unchecked(s * m_); }
  friend LorentzAlgElement operator*(double s, const LorentzAlgElement& x) { return x * s; }

 private:
  Mat5 m_;
};

namespace lorentz_gen {

/// Boost mixing the timelike axis (index 0) with spacelike axis j ∈ {1..4}.
inline LorentzAlgElement boost(int j) {
  Mat5 m = Mat5::Zero();
  m(0, j) = 1.0;
  m(j, 0) = 1.0;
  return LorentzAlgElement::unchecked(m);
}

/// Rotation in the spacelike (i, j) plane, 1 ≤ i, j ≤ 4.
inline LorentzAlgElement rotation(int i, int j) {
  Mat5 m = Mat5::Zero();
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return LorentzAlgElement::unchecked(m);
}

}  // namespace lorentz_gen

inline LorentzAlgElement bracket(const LorentzAlgElement& x, const LorentzAlgElement& y) {
  return LorentzAlgElement::unchecked(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

inline LorentzMatrix exp(const LorentzAlgElement& x, double t) {
  return LorentzMatrix::unchecked(expm(Mat5(t * x.matrix())));
}

inline LorentzAlgElement adjoint(const LorentzMatrix& g, const LorentzAlgElement& x) {
  return LorentzAlgElement::unchecked(g.matrix() * x.matrix() * g.matrix().inverse());
}

inline LorentzMatrix inverse(const LorentzMatrix& g) {
  const Mat5 j = minkowski_gram();
  return LorentzMatrix::unchecked(j * g.matrix().transpose() * j);
}

/**
 * @brief Point of S³ as a null direction, represented with first coordinate 1.
 *
 * The remaining four coordinates then form a unit vector of R⁴.
 */
class SpherePoint {
 public:
  SpherePoint() : n_(Vec5::Zero()) { n_(0) = 1.0; n_(1) = 1.0; }

  const Vec5& n() const { return n_; }
  Eigen::Vector4d unit4() const { return n_.tail<4>(); }

  /// Builds (1, u) from a unit vector u of R⁴ (u is renormalized).
  static SpherePoint from_unit4(const Eigen::Vector4d& u) {
    SpherePoint s;
    s.n_(0) = 1.0;
    s.n_.tail<4>() = u.normalized();
    return s;
  }

  static SpherePoint unchecked(const Vec5& n) {
    SpherePoint s;
    s.n_ = n;
    return s;
  }

 private:
  Vec5 n_;
};

/// Representative of the null line through v with first coordinate 1.
inline SpherePoint sphere_normalize(const Vec5& v, double eps = Tolerances{}.eps) {
  const double norm2 = v.squaredNorm();
  if (!(std::sqrt(norm2) > eps)) throw Error(ErrorCode::ZeroVector, "cannot projectivize the zero vector");
  if (std::abs(q_form(v)) > eps * norm2) throw Error(ErrorCode::NotNull, "vector is not null");
  return SpherePoint::unchecked(v / v(0));
}

inline SpherePoint act_sphere(const LorentzMatrix& g, const SpherePoint& s, double eps = Tolerances{}.eps) {
  return sphere_normalize(g.matrix() * s.n(), eps);
}

/// Dimension of the orbit through [s] of the connected group generated by `gens`.
inline int sphere_orbit_dim(std::span<const LorentzAlgElement> gens, const SpherePoint& s,
                            double rank_tol = Tolerances{}.rank) {
  MatX m(5, static_cast<Eigen::Index>(gens.size()) + 1);
  m.col(0) = s.n();
  for (std::size_t i = 0; i < gens.size(); ++i)
    m.col(static_cast<Eigen::Index>(i) + 1) = gens[i].matrix() * s.n();
  return numerical_rank(m, rank_tol) - 1;
}

/// Tangent directions of the orbit at [s], as span{n, M₁n, …} in R⁵.
inline MatX sphere_tangent_span(std::span<const LorentzAlgElement> gens, const SpherePoint& s,
                                double rank_tol = Tolerances{}.rank) {
  MatX m(5, static_cast<Eigen::Index>(gens.size()) + 1);
  m.col(0) = s.n();
  for (std::size_t i = 0; i < gens.size(); ++i)
    m.col(static_cast<Eigen::Index>(i) + 1) = gens[i].matrix() * s.n();
  return column_space(m, rank_tol);
}

}  // namespace confact
