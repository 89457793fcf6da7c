#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "confact/catalog.hpp"
#include "confact/euclid.hpp"
#include "confact/subalgebra.hpp"

namespace confact {

struct ClassificationResult {
  std::string label;
  /// |a| for the N_a families, absent otherwise.
  std::optional<double> parameter;
  /// h with Ad_h(g) equal to the catalog subalgebra.
  ConfElement conjugator;
  /// Sine of the largest principal angle between span Ad_h(g) and the catalog span.
  double residual = 0.0;
};

/// Rotation taking unit vector `from` to unit vector `to`.
inline Mat3 rotation_taking(const Vec3& from, const Vec3& to) {
  const Vec3 f = from.normalized();
  const Vec3 t = to.normalized();
  const double c = f.dot(t);
  if (c >= 0.0) {
    const Mat3 k = so3::hat(f.cross(t));
    return Mat3::Identity() + k + k * k / (1.0 + c);
  }
  // Half-turn about an axis orthogonal to t flips t, bringing f within 90° of it.
  Eigen::Index i;
  t.cwiseAbs().minCoeff(&i);
  const Vec3 axis = t.cross(Vec3::Unit(i)).normalized();
  const Mat3 half_turn = 2.0 * axis * axis.transpose() - Mat3::Identity();
  return rotation_taking(half_turn * f, t) * half_turn;
}

/**
 * @brief R ∈ SO(3) with R·W·Rᵀ = c·X for some c > 0.
 *
 * X rotates about e₃ with axis vector −e₃, so the axis of W is carried to −e₃.
 */
inline Mat3 align_rotation_axis(const Mat3& w, double rank_tol = Tolerances{}.rank) {
  const Vec3 axis = so3::axis(w);
  if (!(axis.norm() > rank_tol)) throw Error(ErrorCode::ZeroInput, "rotation generator is zero");
  return rotation_taking(axis, -Vec3::UnitZ());
}

/**
 * @brief The unique x with u − a·x − X(x) = 0.
 *
 * Ad_{(1,Id,x)} then sends a + X + u to a + X.
 */
inline Vec3 solve_translation_normalizer(double a, const Vec3& u) {
  if (a == 0.0) throw Error(ErrorCode::SingularCase, "normalizer needs a != 0");
  const double d = a * a + 1.0;
  return {(a * u(0) - u(1)) / d, (u(0) + a * u(1)) / d, u(2) / a};
}

namespace classify_detail {

class Normalizer {
 public:
  Normalizer(const std::vector<ConfAlgElement>& basis, Tolerances tol) : basis_(basis), tol_(tol) { refresh(); }

  void conjugate(const ConfElement& k) {
    for (auto& b : basis_) b = adjoint(k, b);
    h_ = k * h_;
    refresh();
  }

  int rot_dim() const { return numerical_rank(q_.middleRows(1, 3), tol_.rank, 1.0); }
  int linear_dim() const { return numerical_rank(q_.topRows(4), tol_.rank, 1.0); }
  int homothety_dim() const { return numerical_rank(q_.topRows(1), tol_.rank, 1.0); }
  int dim() const { return static_cast<int>(q_.cols()); }
  const std::vector<Vec3>& translations() const { return t_; }
  const ConfElement& conjugator() const { return h_; }
  const std::vector<ConfAlgElement>& basis() const { return basis_; }

  /// Orthonormal basis of T(g) as columns.
  MatX translation_basis() const {
    MatX m(3, static_cast<Eigen::Index>(t_.size()));
    for (std::size_t i = 0; i < t_.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = t_[i];
    return m;
  }

  /// Dominant direction of the rotation parts.
  Mat3 rotation_direction() const {
    auto s = Eigen::JacobiSVD<MatX>(q_.middleRows(1, 3), Eigen::ComputeThinU);
    return so3::from_coords(s.matrixU().col(0));
  }

  /// Unit-scale generator of p_l(g) when it is one-dimensional.
  Eigen::Vector4d linear_line() const {
    const MatX c = column_space(q_.topRows(4), tol_.rank, 1.0);
    if (c.cols() != 1) inconsistent("expected a one-dimensional linear part");
    return c.col(0);
  }

  /// An element of g whose linear part (a, cX, cY, cZ) equals `target`.
  ConfAlgElement with_linear_part(const Eigen::Vector4d& target) const {
    const MatX ql = q_.topRows(4);
    const VecX c = ql.completeOrthogonalDecomposition().solve(target);
    if ((ql * c - target).norm() > 1e3 * tol_.rank * std::max(1.0, target.norm()))
      inconsistent("linear part is not attained by the subalgebra");
    return ConfAlgElement::from_coords(EuclidCoords(q_ * c));
  }

  [[noreturn]] static void inconsistent(const std::string& what) {
    throw Error(ErrorCode::InternalInconsistency, what + " (tolerance failure)");
  }

 private:
  void refresh() {
    const EuclidSubalgebra sub(basis_, tol_);
    q_ = sub.orthonormal(tol_.rank);
    t_ = translation_part(sub, tol_.rank);
  }

  std::vector<ConfAlgElement> basis_;
  Tolerances tol_;
  ConfElement h_;
  MatX q_;
  std::vector<Vec3> t_;
};

inline Eigen::Vector4d linear(double a, double cx, double cy, double cz) { return {a, cx, cy, cz}; }

inline ConfElement shift(const Vec3& x) { return ConfElement::translation(x); }

/// Half-turn about e₁: X ↦ −X, keeps 𝒫 and ℒ.
inline ConfElement half_turn_x() {
  Mat3 d = Mat3::Identity();
  d(1, 1) = -1.0;
  d(2, 2) = -1.0;
  return ConfElement::rotation(d);
}

enum class TKind { Zero, Line, Plane, Full };

inline TKind translation_kind(const Normalizer& n, double tol) {
  const MatX t = n.translation_basis();
  switch (t.cols()) {
    case 0: return TKind::Zero;
    case 1:
      if (subspace_distance(t, MatX(line_L())) > tol) Normalizer::inconsistent("translation line is not the z-axis");
      return TKind::Line;
    case 2:
      if (subspace_distance(t, MatX(plane_P())) > tol) Normalizer::inconsistent("translation plane is not z = 0");
      return TKind::Plane;
    default: return TKind::Full;
  }
}

}  // namespace classify_detail

/**
 * @brief Conjugacy class of a subalgebra of (R ⊕ so(3)) ⊕ R³ with dim ≥ 2.
 *
 * Follows the case analysis on d = dim p_li(g) (3, then 1, then 0), the
 * translation part T(g) and the dimensions of p_l(g), p_h(g); every step
 * conjugates the working basis and accumulates the conjugator, and the
 * result is checked against the catalog span.
 */
inline ClassificationResult classify(const EuclidSubalgebra& g, Tolerances tol = {}) {
  using namespace classify_detail;
  if (g.dim() < 2) throw Error(ErrorCode::DimensionTooSmall, "classification needs dim >= 2");

  Normalizer n(g.basis(), tol);
  std::string label;
  std::optional<double> a_param;

  const int d = n.rot_dim();
  if (d == 2) Normalizer::inconsistent("rotation projection is 2-dimensional");

  if (d == 3) {
    const int t = static_cast<int>(n.translations().size());
    const int pl = n.linear_dim();
    if (t == 3) {
      label = pl == 4 ? "(R+*xSO(3))|xR3" : "SO(3)|xR3";
    } else if (t == 0 && pl == 4) {
      n.conjugate(shift(n.with_linear_part(linear(1, 0, 0, 0)).w()));
      label = "R+*xSO(3)";
    } else if (t == 0 && pl == 3) {
      // Levi factor: kill the translation parts of X+v, Y+w, Z+s together.
      Eigen::Matrix<double, 9, 3> lhs;
      Eigen::Matrix<double, 9, 1> rhs;
      const Mat3 gens[] = {so3::X(), so3::Y(), so3::Z()};
      for (int i = 0; i < 3; ++i) {
        Eigen::Vector4d target = Eigen::Vector4d::Zero();
        target(i + 1) = 1.0;
        lhs.middleRows<3>(3 * i) = gens[i];
        rhs.segment<3>(3 * i) = n.with_linear_part(target).w();
      }
      n.conjugate(shift(lhs.colPivHouseholderQr().solve(rhs)));
      label = "SO(3)";
    } else {
      Normalizer::inconsistent("full rotation part with translation part of dimension " + std::to_string(t));
    }
  } else if (d == 1) {
    n.conjugate(ConfElement::rotation(align_rotation_axis(n.rotation_direction(), tol.rank)));
    const TKind t = translation_kind(n, 1e3 * tol.rank);
    const int pl = n.linear_dim();
    if (pl == 2) {
      n.conjugate(shift(n.with_linear_part(linear(1, 0, 0, 0)).w()));
      switch (t) {
        case TKind::Full: label = "(R+*xSO(2))|xR3"; break;
        case TKind::Plane: label = "(R+*xSO(2))|xP"; break;
        case TKind::Line: label = "(R+*xSO(2))|xL"; break;
        case TKind::Zero: label = "R+*xSO(2)"; break;
      }
    } else if (pl == 1) {
      const Eigen::Vector4d line = n.linear_line();
      const double a = line(0) / line(1);
      const bool zero_a = std::abs(a) <= tol.rank;
      const Vec3 u = n.with_linear_part(linear(zero_a ? 0.0 : a, 1, 0, 0)).w();
      if (t == TKind::Zero) Normalizer::inconsistent("one-dimensional subalgebra reached the classifier");
      if (zero_a) {
        // SO(2) acting on T(g); u₃ decides between SO(2)⋉𝒫 and the screw group 𝒮⋉𝒫.
        n.conjugate(shift(Vec3(-u(1), u(0), 0.0)));
        if (t == TKind::Full) {
          label = "SO(2)|xR3";
        } else if (t == TKind::Line) {
          label = "SO(2)xL";
        } else {
          const double u3 = n.with_linear_part(linear(0, 1, 0, 0)).w()(2);
          if (std::abs(u3) <= tol.rank * std::max(1.0, u.norm())) {
            label = "SO(2)|xP";
          } else {
            n.conjugate(ConfElement::homothety(1.0 / u3));
            label = "S|xP";
          }
        }
      } else {
        if (t != TKind::Full) n.conjugate(shift(solve_translation_normalizer(a, u)));
        if (a < 0.0) n.conjugate(half_turn_x());
        a_param = std::abs(a);
        label = t == TKind::Full ? "Na|xR3" : t == TKind::Plane ? "Na|xP" : "Na|xL";
      }
    } else {
      Normalizer::inconsistent("rotation line with linear part of dimension " + std::to_string(pl));
    }
  } else {
    const MatX tb = n.translation_basis();
    if (tb.cols() == 1) {
      n.conjugate(ConfElement::rotation(rotation_taking(tb.col(0), Vec3::UnitZ())));
    } else if (tb.cols() == 2) {
      const Vec3 normal = Vec3(tb.col(0)).cross(Vec3(tb.col(1)));
      n.conjugate(ConfElement::rotation(rotation_taking(normal, Vec3::UnitZ())));
    }
    const TKind t = translation_kind(n, 1e3 * tol.rank);
    if (n.homothety_dim() == 0) {
      if (t == TKind::Plane) label = "P";
      else if (t == TKind::Full) label = "R3";
      else Normalizer::inconsistent("pure-translation subalgebra of unexpected dimension");
    } else {
      if (t == TKind::Zero) Normalizer::inconsistent("one-dimensional subalgebra reached the classifier");
      if (t != TKind::Full) n.conjugate(shift(n.with_linear_part(linear(1, 0, 0, 0)).w()));
      label = t == TKind::Full ? "R+*|xR3" : t == TKind::Plane ? "R+*|xP" : "R+*|xL";
    }
  }

  ClassificationResult result;
  result.label = label;
  result.parameter = a_param;
  result.conjugator = n.conjugator();
  std::vector<ConfAlgElement> image;
  for (const auto& b : g.basis()) image.push_back(adjoint(result.conjugator, b));
  const CatalogEntry target = catalog_get(label, a_param);
  result.residual = span_distance(image, as_euclid(target.generators).basis(), tol.rank);
  if (!(result.residual <= tol.rank))
    Normalizer::inconsistent("conjugated span misses " + label + " by " + std::to_string(result.residual));
  return result;
}

inline ClassificationResult classify(const std::vector<ConfAlgElement>& basis, Tolerances tol = {}) {
  return classify(EuclidSubalgebra(basis, tol), tol);
}

inline ClassificationResult classify(const AnySubalgebra& g, Tolerances tol = {}) {
  return classify(as_euclid(g), tol);
}

}  // namespace confact
