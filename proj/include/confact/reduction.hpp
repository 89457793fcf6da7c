#pragma once

#include <complex>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Eigenvalues>

#include "confact/lorentz.hpp"
#include "confact/subalgebra.hpp"

namespace confact {

enum class ReductionBranch { FixedHyperbolicPoint, FixedSpherePoint, InvariantPositiveDefinite, Irreducible };

inline std::string_view to_string(ReductionBranch b) {
  switch (b) {
    case ReductionBranch::FixedHyperbolicPoint: return "FixedHyperbolicPoint";
    case ReductionBranch::FixedSpherePoint: return "FixedSpherePoint";
    case ReductionBranch::InvariantPositiveDefinite: return "InvariantPositiveDefinite";
    case ReductionBranch::Irreducible: return "Irreducible";
  }
  return "?";
}

enum class Causal { Timelike, Null, Spacelike, PositiveDefinite, Lorentzian, Degenerate };

inline std::string_view to_string(Causal c) {
  switch (c) {
    case Causal::Timelike: return "timelike";
    case Causal::Null: return "null";
    case Causal::Spacelike: return "spacelike";
    case Causal::PositiveDefinite: return "positive-definite";
    case Causal::Lorentzian: return "lorentzian";
    case Causal::Degenerate: return "degenerate";
  }
  return "?";
}

struct InvariantSubspace {
  MatX basis;  ///< 5×d, orthonormal in the Euclidean sense
  Causal type;
  bool in_kernel;
};

struct ReductionReport {
  ReductionBranch primary = ReductionBranch::Irreducible;
  /// Every branch that applies, strongest first.
  std::vector<ReductionBranch> branches;
  MatX kernel;
  std::optional<Vec5> fixed_sphere_point;
  std::optional<Vec5> fixed_hyperbolic_point;
  int positive_definite_dim = 0;
  std::vector<InvariantSubspace> subspaces;
};

namespace detail {

class InvarianceScanner {
 public:
  InvarianceScanner(std::span<const LorentzAlgElement> gens, Tolerances tol) : gens_(gens), tol_(tol) {}

  bool line_invariant(const Vec5& v) const {
    for (const auto& g : gens_) {
      const Vec5 mv = g.matrix() * v;
      const Vec5 r = mv - v.dot(mv) * v;
      if (r.norm() > tol_.rank * std::max(1.0, g.matrix().norm())) return false;
    }
    return true;
  }

  bool plane_invariant(const MatX& b) const {
    for (const auto& g : gens_) {
      const MatX mb = g.matrix() * b;
      const MatX r = mb - b * (b.transpose() * mb);
      if (r.norm() > tol_.rank * std::max(1.0, g.matrix().norm())) return false;
    }
    return true;
  }

  static Causal line_type(const Vec5& v, double null_tol) {
    const double q = q_form(v);
    if (std::abs(q) <= null_tol) return Causal::Null;
    return q < 0.0 ? Causal::Timelike : Causal::Spacelike;
  }

  static Causal plane_type(const MatX& b, double null_tol) {
    const Eigen::Matrix2d gram = b.transpose() * minkowski_gram() * b;
    const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(gram).eigenvalues();
    if (ev(0) > null_tol) return Causal::PositiveDefinite;
    if (ev(0) < -null_tol && ev(1) > null_tol) return Causal::Lorentzian;
    return Causal::Degenerate;
  }

 private:
  std::span<const LorentzAlgElement> gens_;
  Tolerances tol_;
};

}  // namespace detail

/**
 * @brief Decides which reduction applies to a connected subgroup of SO₀(1,4).
 *
 * A proper connected subgroup fixes a point of H⁴ (invariant timelike line),
 * fixes a point of S³ (invariant null line), or preserves a positive-definite
 * subspace of dimension 1 or 2; otherwise it acts irreducibly.
 *
 * Candidates come from the common kernel, from real eigenvectors and
 * complex-eigenvalue planes of random combinations of the generators, and
 * from eigenspaces that every generator preserves. Each candidate is then
 * tested against all generators.
 */
inline ReductionReport reduction_scan(const std::vector<LorentzAlgElement>& gens, Tolerances tol = {}) {
  const ClosureReport closure = closure_check(gens, tol.rank);
  if (!closure.passed)
    throw Error(ErrorCode::NotASubalgebra,
                "bracket residual " + std::to_string(closure.max_residual) + " exceeds rank tolerance");

  ReductionReport report;
  detail::InvarianceScanner scanner(gens, tol);
  const double null_tol = 1e2 * tol.rank;
  const Mat5 j = minkowski_gram();

  auto already_found = [&](const MatX& b) {
    for (const auto& s : report.subspaces)
      if (s.basis.cols() == b.cols() && subspace_distance(s.basis, b) < 1e-6) return true;
    return false;
  };
  auto add_line = [&](Vec5 v, bool in_kernel) {
    v.normalize();
    MatX b = v;
    if (already_found(b)) return;
    report.subspaces.push_back({b, detail::InvarianceScanner::line_type(v, null_tol), in_kernel});
  };
  auto add_plane = [&](const MatX& b, bool in_kernel) {
    if (already_found(b)) return;
    report.subspaces.push_back({b, detail::InvarianceScanner::plane_type(b, null_tol), in_kernel});
  };

  // Common kernel and the causal character of q restricted to it.
  MatX stacked(5 * static_cast<Eigen::Index>(gens.size()), 5);
  for (std::size_t i = 0; i < gens.size(); ++i) stacked.middleRows(5 * static_cast<Eigen::Index>(i), 5) = gens[i].matrix();
  report.kernel = gens.empty() ? MatX(MatX::Identity(5, 5)) : null_space(stacked, tol.rank);
  const MatX& k = report.kernel;
  int kernel_positive = 0;
  if (k.cols() > 0) {
    const MatX gram = k.transpose() * j * k;
    Eigen::SelfAdjointEigenSolver<MatX> es(gram);
    const VecX& ev = es.eigenvalues();
    std::optional<Eigen::Index> neg, pos, zero;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < -null_tol) {
        if (!neg) neg = i;
      } else if (ev(i) > null_tol) {
        ++kernel_positive;
        pos = i;
      } else if (!zero) {
        zero = i;
      }
    }
    if (neg) {
      const Vec5 t = k * es.eigenvectors().col(*neg);
      report.fixed_hyperbolic_point = t.normalized();
      add_line(t, true);
    }
    if (zero) {
      const Vec5 n = k * es.eigenvectors().col(*zero);
      report.fixed_sphere_point = n.normalized();
      add_line(n, true);
    } else if (neg && pos) {
      const Vec5 n = k * (es.eigenvectors().col(*neg) / std::sqrt(-ev(*neg)) +
                          es.eigenvectors().col(*pos) / std::sqrt(ev(*pos)));
      report.fixed_sphere_point = n.normalized();
      add_line(n, true);
    }
    if (pos) add_line(k * es.eigenvectors().col(*pos), true);
    if (kernel_positive >= 2) {
      MatX b(5, 2);
      int c = 0;
      for (Eigen::Index i = 0; i < ev.size() && c < 2; ++i)
        if (ev(i) > null_tol) b.col(c++) = k * es.eigenvectors().col(i);
      add_plane(column_space(b, tol.rank), true);
    }
  }

  // Non-kernel invariant lines and planes from random generic combinations.
  std::mt19937_64 rng(0x5CA77E5ull);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 4 && !gens.empty(); ++trial) {
    Mat5 m = Mat5::Zero();
    for (const auto& g : gens) m += normal(rng) * g.matrix();
    const double scale = std::max(1.0, m.norm());
    Eigen::EigenSolver<Mat5> es(m);
    const auto values = es.eigenvalues();
    const auto vectors = es.eigenvectors();
    for (int i = 0; i < 5; ++i) {
      const std::complex<double> mu = values(i);
      const Eigen::Matrix<std::complex<double>, 5, 1> z = vectors.col(i);
      if (std::abs(mu.imag()) <= 1e-6 * scale) {
        // Real eigenvalue: test the eigenvector, then its whole eigenspace.
        Vec5 v = z.real();
        if (v.norm() < 1e-12) v = z.imag();
        if (scanner.line_invariant(v.normalized()) && std::abs(mu.real()) > 1e-6 * scale) add_line(v, false);
        const MatX e = null_space(m - mu.real() * Mat5::Identity(), 1e-6);
        if (e.cols() >= 2 && scanner.plane_invariant(e)) {
          // Invariant eigenspace: look for common eigenvectors inside it.
          MatX c = MatX::Zero(e.cols(), e.cols());
          for (const auto& g : gens) c += normal(rng) * (e.transpose() * g.matrix() * e);
          Eigen::EigenSolver<MatX> inner(c);
          for (Eigen::Index r = 0; r < inner.eigenvalues().size(); ++r) {
            if (std::abs(inner.eigenvalues()(r).imag()) > 1e-6 * std::max(1.0, c.norm())) continue;
            const Vec5 w = e * inner.eigenvectors().col(r).real();
            if (w.norm() > 1e-12 && scanner.line_invariant(w.normalized())) add_line(w, false);
          }
          if (e.cols() == 2) add_plane(e, false);
        }
      } else if (mu.imag() > 0.0) {
        MatX b(5, 2);
        b.col(0) = z.real();
        b.col(1) = z.imag();
        const MatX q = column_space(b, tol.rank);
        if (q.cols() == 2 && scanner.plane_invariant(q)) add_plane(q, false);
      }
    }
  }

  // Planes spanned by pairs of invariant lines are invariant too.
  const std::size_t n_found = report.subspaces.size();
  for (std::size_t a = 0; a < n_found; ++a)
    for (std::size_t b = a + 1; b < n_found; ++b) {
      if (report.subspaces[a].basis.cols() != 1 || report.subspaces[b].basis.cols() != 1) continue;
      MatX pair(5, 2);
      pair << report.subspaces[a].basis, report.subspaces[b].basis;
      const MatX q = column_space(pair, tol.rank);
      if (q.cols() == 2) add_plane(q, report.subspaces[a].in_kernel && report.subspaces[b].in_kernel);
    }

  for (const auto& s : report.subspaces) {
    if (s.type == Causal::Null && !report.fixed_sphere_point) report.fixed_sphere_point = Vec5(s.basis.col(0));
    if (s.type == Causal::Timelike && !report.fixed_hyperbolic_point)
      report.fixed_hyperbolic_point = Vec5(s.basis.col(0));
    if (s.type == Causal::Spacelike) report.positive_definite_dim = std::max(report.positive_definite_dim, 1);
    if (s.type == Causal::PositiveDefinite) report.positive_definite_dim = 2;
  }
  report.positive_definite_dim = std::max(report.positive_definite_dim, std::min(2, kernel_positive));

  if (report.fixed_hyperbolic_point) report.branches.push_back(ReductionBranch::FixedHyperbolicPoint);
  if (report.fixed_sphere_point) report.branches.push_back(ReductionBranch::FixedSpherePoint);
  if (report.positive_definite_dim > 0) report.branches.push_back(ReductionBranch::InvariantPositiveDefinite);
  if (report.branches.empty()) report.branches.push_back(ReductionBranch::Irreducible);
  report.primary = report.branches.front();
  return report;
}

inline ReductionReport reduction_scan(const LorentzSubalgebra& g, Tolerances tol = {}) {
  return reduction_scan(g.basis(), tol);
}

}  // namespace confact
