#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "confact/core.hpp"
#include "confact/euclid.hpp"
#include "confact/linalg.hpp"
#include "confact/lorentz.hpp"

namespace confact {

template <typename E>
struct AlgebraTraits;

template <>
struct AlgebraTraits<ConfAlgElement> {
  static constexpr Model model = Model::Euclid;
  static constexpr int dim = 7;
  static VecX coords(const ConfAlgElement& x) { return x.coords(); }
  static ConfAlgElement from_coords(const VecX& c) { return ConfAlgElement::from_coords(EuclidCoords(c)); }
};

template <>
struct AlgebraTraits<LorentzAlgElement> {
  static constexpr Model model = Model::Lorentz;
  static constexpr int dim = 10;
  static VecX coords(const LorentzAlgElement& x) { return x.coords(); }
  static LorentzAlgElement from_coords(const VecX& c) { return LorentzAlgElement::from_coords(LorentzCoords(c)); }
};

/// Coordinate vectors of the elements, one per column.
template <typename E>
MatX coordinate_columns(std::span<const E> elements) {
  MatX m(AlgebraTraits<E>::dim, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    m.col(static_cast<Eigen::Index>(i)) = AlgebraTraits<E>::coords(elements[i]);
  return m;
}

struct ClosureReport {
  std::size_t count = 0;
  int rank = 0;
  /// Largest ‖[bᵢ,bⱼ] − proj[bᵢ,bⱼ]‖ / (‖bᵢ‖‖bⱼ‖) over all pairs.
  double max_residual = 0.0;
  bool passed = true;
};

/**
 * @brief Rank of the list and how far it is from being bracket-closed.
 *
 * Passes iff the largest relative bracket residual is at most `rank_tol`.
 */
template <typename E>
ClosureReport closure_check(std::span<const E> basis, double rank_tol = Tolerances{}.rank) {
  ClosureReport report;
  report.count = basis.size();
  if (basis.empty()) return report;
  const MatX cols = coordinate_columns(basis);
  report.rank = numerical_rank(cols, rank_tol);
  const MatX q = column_space(cols, rank_tol);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const VecX b = AlgebraTraits<E>::coords(bracket(basis[i], basis[j]));
      const double scale = cols.col(static_cast<Eigen::Index>(i)).norm() * cols.col(static_cast<Eigen::Index>(j)).norm();
      if (scale == 0.0) continue;
      const VecX r = b - q * (q.transpose() * b);
      report.max_residual = std::max(report.max_residual, r.norm() / scale);
    }
  }
  report.passed = report.max_residual <= rank_tol;
  return report;
}

template <typename E>
ClosureReport closure_check(const std::vector<E>& basis, double rank_tol = Tolerances{}.rank) {
  return closure_check(std::span<const E>(basis), rank_tol);
}

/**
 * @brief A Lie subalgebra given by an ordered, linearly independent basis.
 *
 * Construction drops elements that do not enlarge the span and throws
 * NotASubalgebra when the span is not bracket-closed.
 */
template <typename E>
class Subalgebra {
 public:
  using Element = E;
  static constexpr Model model = AlgebraTraits<E>::model;

  Subalgebra() = default;

  explicit Subalgebra(const std::vector<E>& elements, Tolerances tol = {}) {
    int current = 0;
    for (const E& x : elements) {
      std::vector<E> trial = basis_;
      trial.push_back(x);
      const int r = numerical_rank(coordinate_columns(std::span<const E>(trial)), tol.rank);
      if (r > current) {
        basis_ = std::move(trial);
        current = r;
      }
    }
    const ClosureReport report = closure_check(std::span<const E>(basis_), tol.rank);
    if (!report.passed)
      throw Error(ErrorCode::NotASubalgebra,
                  "bracket residual " + std::to_string(report.max_residual) + " exceeds rank tolerance");
  }

  const std::vector<E>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }

  /// Coordinates of the basis, one element per column.
  MatX coordinates() const { return coordinate_columns(std::span<const E>(basis_)); }

  /// Orthonormal basis of the span in coordinate space (columns).
  MatX orthonormal(double rank_tol = Tolerances{}.rank) const { return column_space(coordinates(), rank_tol); }

 private:
  std::vector<E> basis_;
};

using EuclidSubalgebra = Subalgebra<ConfAlgElement>;
using LorentzSubalgebra = Subalgebra<LorentzAlgElement>;
using AnySubalgebra = std::variant<EuclidSubalgebra, LorentzSubalgebra>;

inline Model model_of(const AnySubalgebra& g) {
  return std::holds_alternative<EuclidSubalgebra>(g) ? Model::Euclid : Model::Lorentz;
}

inline const EuclidSubalgebra& as_euclid(const AnySubalgebra& g) {
  if (const auto* e = std::get_if<EuclidSubalgebra>(&g)) return *e;
  throw Error(ErrorCode::ModelMismatch, "operation requires a subalgebra of the similarity algebra");
}

inline const LorentzSubalgebra& as_lorentz(const AnySubalgebra& g) {
  if (const auto* l = std::get_if<LorentzSubalgebra>(&g)) return *l;
  throw Error(ErrorCode::ModelMismatch, "operation requires a subalgebra of so(1,4)");
}

/// Distance between the spans of two subalgebras (sine of the largest principal angle).
template <typename E>
double span_distance(const std::vector<E>& a, const std::vector<E>& b, double rank_tol = Tolerances{}.rank) {
  return subspace_distance(column_space(coordinate_columns(std::span<const E>(a)), rank_tol),
                           column_space(coordinate_columns(std::span<const E>(b)), rank_tol));
}

/**
 * @brief Orthonormal basis of the translation part T(g) = ker(p_l restricted to g).
 *
 * Works on an orthonormal coordinate basis so singular values of the linear
 * block live on the unit scale and are thresholded absolutely.
 */
inline std::vector<Vec3> translation_part(const EuclidSubalgebra& g, double rank_tol = Tolerances{}.rank) {
  std::vector<Vec3> out;
  if (g.empty()) return out;
  const MatX q = g.orthonormal(rank_tol);
  const MatX kernel = null_space(q.topRows(4), rank_tol, 1.0);
  if (kernel.cols() == 0) return out;
  const MatX t = column_space(q.bottomRows(3) * kernel, rank_tol, 1.0);
  for (Eigen::Index i = 0; i < t.cols(); ++i) out.emplace_back(t.col(i));
  return out;
}

inline std::vector<Vec3> translation_part(const AnySubalgebra& g, double rank_tol = Tolerances{}.rank) {
  return translation_part(as_euclid(g), rank_tol);
}

enum class Projection { l, li, h };

struct ProjectionImage {
  int dim = 0;
  /// Basis of the image, embedded back into the algebra (translation part zero).
  std::vector<ConfAlgElement> basis;
};

/**
 * @brief Image of g under p_l, p_li or p_h.
 *
 * A two-dimensional p_li image cannot come from a genuine subalgebra (so(3)
 * has no 2-dimensional subalgebra) and is reported as InternalInconsistency.
 */
inline ProjectionImage projection_image(const EuclidSubalgebra& g, Projection which,
                                        double rank_tol = Tolerances{}.rank) {
  ProjectionImage img;
  if (g.empty()) return img;
  const MatX q = g.orthonormal(rank_tol);
  switch (which) {
    case Projection::l: {
      const MatX c = column_space(q.topRows(4), rank_tol, 1.0);
      for (Eigen::Index i = 0; i < c.cols(); ++i) {
        EuclidCoords v = EuclidCoords::Zero();
        v.head<4>() = c.col(i);
        img.basis.push_back(ConfAlgElement::from_coords(v));
      }
      break;
    }
    case Projection::li: {
      const MatX c = column_space(q.middleRows(1, 3), rank_tol, 1.0);
      for (Eigen::Index i = 0; i < c.cols(); ++i) {
        EuclidCoords v = EuclidCoords::Zero();
        v.segment<3>(1) = c.col(i);
        img.basis.push_back(ConfAlgElement::from_coords(v));
      }
      if (c.cols() == 2)
        throw Error(ErrorCode::InternalInconsistency,
                    "rotation projection is 2-dimensional; so(3) has no such subalgebra (tolerance failure)");
      break;
    }
    case Projection::h: {
      if (numerical_rank(q.topRows(1), rank_tol, 1.0) == 1) img.basis.push_back(gen::lambda());
      break;
    }
  }
  img.dim = static_cast<int>(img.basis.size());
  return img;
}

inline ProjectionImage projection_image(const AnySubalgebra& g, Projection which,
                                        double rank_tol = Tolerances{}.rank) {
  return projection_image(as_euclid(g), which, rank_tol);
}

}  // namespace confact
