#pragma once

#include <cmath>
#include <ostream>

#include "confact/core.hpp"
#include "confact/expm.hpp"

namespace confact {

/// A point of E³ in orthonormal coordinates; the origin is (0,0,0).
using EuclidPoint = Vec3;

/// Canonical coordinates of an algebra element: (a, cX, cY, cZ, w1, w2, w3).
using EuclidCoords = Eigen::Matrix<double, 7, 1>;

namespace so3 {

/// Basis of so(3) with [X,Y] = -Z, [X,Z] = Y, [Y,Z] = -X.
inline Mat3 X() {
  Mat3 m = Mat3::Zero();
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  return m;
}
inline Mat3 Y() {
  Mat3 m = Mat3::Zero();
  m(0, 2) = 1.0;
  m(2, 0) = -1.0;
  return m;
}
inline Mat3 Z() {
  Mat3 m = Mat3::Zero();
  m(1, 2) = 1.0;
  m(2, 1) = -1.0;
  return m;
}

/// Coefficients (cX, cY, cZ) of a skew matrix in the X, Y, Z basis.
inline Vec3 coords(const Mat3& skew) { return {skew(0, 1), skew(0, 2), skew(1, 2)}; }

inline Mat3 from_coords(const Vec3& c) { return c(0) * X() + c(1) * Y() + c(2) * Z(); }

/// Axis vector w with skew·p = w × p.
inline Vec3 axis(const Mat3& skew) { return {skew(2, 1), skew(0, 2), skew(1, 0)}; }

inline Mat3 hat(const Vec3& w) {
  Mat3 m;
  m << 0.0, -w(2), w(1), w(2), 0.0, -w(0), -w(1), w(0), 0.0;
  return m;
}

}  // namespace so3

/**
 * @brief Similarity transformation x ↦ alpha·A·x + v of E³.
 *
 * Homothety factor and orthogonal part are stored separately.
 */
class ConfElement {
 public:
  ConfElement() : alpha_(1.0), a_(Mat3::Identity()), v_(Vec3::Zero()) {}

  /// Throws InvariantViolation when alpha is zero or A is not orthogonal within eps.
  ConfElement(double alpha, const Mat3& a, const Vec3& v, double eps = Tolerances{}.eps)
      : alpha_(alpha), a_(a), v_(v) {
    if (!(std::abs(alpha) > 0.0) || !std::isfinite(alpha))
      throw Error(ErrorCode::InvariantViolation, "homothety factor must be a nonzero finite number");
    if ((a.transpose() * a - Mat3::Identity()).norm() > eps)
      throw Error(ErrorCode::InvariantViolation, "linear part is not orthogonal");
    if (!v.allFinite()) throw Error(ErrorCode::InvariantViolation, "translation is not finite");
  }

  static ConfElement identity() { return {}; }
  static ConfElement translation(const Vec3& v) { return unchecked(1.0, Mat3::Identity(), v); }
  static ConfElement homothety(double alpha) { return {alpha, Mat3::Identity(), Vec3::Zero()}; }
  static ConfElement rotation(const Mat3& a) { return {1.0, a, Vec3::Zero()}; }

  /// Skips validation; for results of closed operations on valid operands.
  static ConfElement unchecked(double alpha, const Mat3& a, const Vec3& v) {
    ConfElement g;
    g.alpha_ = alpha;
    g.a_ = a;
    g.v_ = v;
    return g;
  }

  double alpha() const { return alpha_; }
  const Mat3& A() const { return a_; }
  const Vec3& v() const { return v_; }

  /// Homogeneous 4×4 form [[alpha·A, v], [0, 1]].
  Mat4 matrix() const {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = alpha_ * a_;
    m.topRightCorner<3, 1>() = v_;
    return m;
  }

 private:
  double alpha_;
  Mat3 a_;
  Vec3 v_;
};

inline ConfElement compose(const ConfElement& g, const ConfElement& h) {
  return ConfElement::unchecked(g.alpha() * h.alpha(), g.A() * h.A(), g.alpha() * (g.A() * h.v()) + g.v());
}

inline ConfElement operator*(const ConfElement& g, const ConfElement& h) { return compose(g, h); }

inline ConfElement inverse(const ConfElement& g) {
  const Mat3 at = g.A().transpose();
  return ConfElement::unchecked(1.0 / g.alpha(), at, -(at * g.v()) / g.alpha());
}

inline EuclidPoint act(const ConfElement& g, const EuclidPoint& p) {
  return g.alpha() * (g.A() * p) + g.v();
}

inline std::ostream& operator<<(std::ostream& os, const ConfElement& g) {
  Eigen::IOFormat fmt(Eigen::FullPrecision, Eigen::DontAlignCols, ", ", "; ", "", "", "[", "]");
  return os << "(alpha=" << g.alpha() << ", A=" << g.A().format(fmt)
            << ", v=" << g.v().transpose().format(fmt) << ")";
}

/**
 * @brief Element a + V + w of the similarity algebra (R ⊕ so(3)) ⊕ R³.
 *
 * `a` is the coefficient of the homothety generator λ = 1, `V` the rotation
 * generator, `w` the translation generator.
 */
class ConfAlgElement {
 public:
  ConfAlgElement() : a_(0.0), v_(Mat3::Zero()), w_(Vec3::Zero()) {}

  /// Throws InvariantViolation when V is not skew within eps.
  ConfAlgElement(double a, const Mat3& v, const Vec3& w, double eps = Tolerances{}.eps) : a_(a), w_(w) {
    if ((v + v.transpose()).norm() > eps * std::max(1.0, v.norm()))
      throw Error(ErrorCode::InvariantViolation, "rotation part is not skew-symmetric");
    v_ = 0.5 * (v - v.transpose());
  }

  static ConfAlgElement from_coords(const EuclidCoords& c) {
    return ConfAlgElement(c(0), so3::from_coords(c.segment<3>(1)), c.tail<3>());
  }

  double a() const { return a_; }
  const Mat3& V() const { return v_; }
  const Vec3& w() const { return w_; }

  EuclidCoords coords() const {
    EuclidCoords c;
    c << a_, so3::coords(v_), w_;
    return c;
  }

  /// Homogeneous 4×4 form [[a·I + V, w], [0, 0]].
  Mat4 matrix() const {
    Mat4 m = Mat4::Zero();
    m.topLeftCorner<3, 3>() = a_ * Mat3::Identity() + v_;
    m.topRightCorner<3, 1>() = w_;
    return m;
  }

  ConfAlgElement operator+(const ConfAlgElement& o) const { return raw(a_ + o.a_, v_ + o.v_, w_ + o.w_); }
  ConfAlgElement operator-(const ConfAlgElement& o) const { return raw(a_ - o.a_, v_ - o.v_, w_ - o.w_); }
  ConfAlgElement operator-() const { return raw(-a_, -v_, -w_); }
  ConfAlgElement operator*(double s) const { return raw(s * a_, s * v_, s * w_); }
  friend ConfAlgElement operator*(double s, const ConfAlgElement& x) { return x * s; }

  static ConfAlgElement raw(double a, const Mat3& v, const Vec3& w) {
    ConfAlgElement x;
    x.a_ = a;
    x.v_ = v;
    x.w_ = w;
    return x;
  }

 private:
  double a_;
  Mat3 v_;
  Vec3 w_;
};

inline std::ostream& operator<<(std::ostream& os, const ConfAlgElement& x) {
  Eigen::IOFormat fmt(Eigen::FullPrecision, Eigen::DontAlignCols, ", ", ", ", "", "", "[", "]");
  return os << x.coords().transpose().format(fmt);
}

namespace gen {

/// Homothety generator λ = 1.
inline ConfAlgElement lambda() { return ConfAlgElement::raw(1.0, Mat3::Zero(), Vec3::Zero()); }
inline ConfAlgElement X() { return ConfAlgElement::raw(0.0, so3::X(), Vec3::Zero()); }
inline ConfAlgElement Y() { return ConfAlgElement::raw(0.0, so3::Y(), Vec3::Zero()); }
inline ConfAlgElement Z() { return ConfAlgElement::raw(0.0, so3::Z(), Vec3::Zero()); }
/// Translation generator e_i, i ∈ {0,1,2}.
inline ConfAlgElement e(int i) { return ConfAlgElement::raw(0.0, Mat3::Zero(), Vec3::Unit(i)); }
inline ConfAlgElement translation(const Vec3& w) { return ConfAlgElement::raw(0.0, Mat3::Zero(), w); }
/// a + X
inline ConfAlgElement screw_homothety(double a) { return a * lambda() + X(); }

}  // namespace gen

/// The plane 𝒫 = Re₁ ⊕ Re₂ and line ℒ = Re₃, as orthonormal column bases.
inline Eigen::Matrix<double, 3, 2> plane_P() {
  Eigen::Matrix<double, 3, 2> b = Eigen::Matrix<double, 3, 2>::Zero();
  b(0, 0) = 1.0;
  b(1, 1) = 1.0;
  return b;
}
inline Vec3 line_L() { return Vec3::UnitZ(); }

inline ConfAlgElement bracket(const ConfAlgElement& x, const ConfAlgElement& y) {
  return ConfAlgElement::raw(0.0, x.V() * y.V() - y.V() * x.V(),
                             x.V() * y.w() + x.a() * y.w() - y.V() * x.w() - y.a() * x.w());
}

/// Ad_{(r,A,v)}(b + W + w) = b + AWA⁻¹ + rA(w) − bv − AWA⁻¹(v).
inline ConfAlgElement adjoint(const ConfElement& g, const ConfAlgElement& x) {
  const Mat3 w_conj = g.A() * x.V() * g.A().transpose();
  return ConfAlgElement::raw(x.a(), w_conj, g.alpha() * (g.A() * x.w()) - x.a() * g.v() - w_conj * g.v());
}

/**
 * @brief One-parameter subgroup t ↦ exp(t·ξ).
 *
 * Exponentiates the homogeneous 4×4 form and splits the linear block into
 * alpha·A with alpha = det(block)^(1/3).
 */
inline ConfElement exp(const ConfAlgElement& x, double t) {
  const Mat4 m = expm(Mat4(t * x.matrix()));
  const Mat3 block = m.topLeftCorner<3, 3>();
  const double det = block.determinant();
  if (!(det > 0.0) || !std::isfinite(det))
    throw Error(ErrorCode::DecompositionFailure, "linear block of the exponential is singular");
  const double alpha = std::cbrt(det);
  return ConfElement::unchecked(alpha, block / alpha, m.topRightCorner<3, 1>());
}

/// Velocity of t ↦ exp(tξ)·p at t = 0: a·p + V·p + w.
inline Vec3 generator_field(const ConfAlgElement& x, const EuclidPoint& p) {
  return x.a() * p + x.V() * p + x.w();
}

/// p_l : a + V + w ↦ a + V
inline ConfAlgElement project_l(const ConfAlgElement& x) {
  return ConfAlgElement::raw(x.a(), x.V(), Vec3::Zero());
}
/// p_li : a + V + w ↦ V
inline Mat3 project_li(const ConfAlgElement& x) { return x.V(); }
/// p_h : a + V + w ↦ a
inline double project_h(const ConfAlgElement& x) { return x.a(); }

}  // namespace confact
