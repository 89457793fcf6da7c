#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "confact/catalog.hpp"
#include "confact/euclid.hpp"
#include "confact/lorentz.hpp"
#include "confact/subalgebra.hpp"

namespace confact {

/// Euclidean field span at p: columns generator_field(bᵢ, p).
inline MatX euclid_fields(const EuclidSubalgebra& g, const EuclidPoint& p) {
  MatX m(3, static_cast<Eigen::Index>(g.dim()));
  for (std::size_t i = 0; i < g.dim(); ++i) m.col(static_cast<Eigen::Index>(i)) = generator_field(g.basis()[i], p);
  return m;
}

inline int orbit_dim_at(const EuclidSubalgebra& g, const EuclidPoint& p, double rank_tol = Tolerances{}.rank) {
  if (g.empty()) return 0;
  return numerical_rank(euclid_fields(g, p), rank_tol);
}

inline int orbit_dim_at(const LorentzSubalgebra& g, const SpherePoint& s, double rank_tol = Tolerances{}.rank) {
  return sphere_orbit_dim(std::span<const LorentzAlgElement>(g.basis()), s, rank_tol);
}

/// A 3-vector is a Euclidean point, a 5-vector a null representative of a point of S³.
inline int orbit_dim_at(const AnySubalgebra& g, const VecX& p, Tolerances tol = {}) {
  if (model_of(g) == Model::Euclid) {
    if (p.size() != 3) throw Error(ErrorCode::ModelMismatch, "Euclidean orbit needs a 3-vector");
    return orbit_dim_at(as_euclid(g), EuclidPoint(p), tol.rank);
  }
  if (p.size() != 5) throw Error(ErrorCode::ModelMismatch, "sphere orbit needs a 5-vector");
  return orbit_dim_at(as_lorentz(g), sphere_normalize(Vec5(p), tol.eps), tol.rank);
}

struct Stratum {
  int dim = 0;
  std::size_t count = 0;
  VecX witness;
  /// How many of the points come from the deliberate singular-set list.
  std::size_t forced = 0;
};

struct OrbitReport {
  Model model = Model::Euclid;
  int max_dim = 0;
  int cohomogeneity = 3;
  std::vector<Stratum> strata;  ///< ascending by dimension
  std::uint64_t sampler_seed = kDefaultSeed;
  std::size_t samples = 0;
};

/// Points on the usual singular sets: origin, z-axis, plane z = 0.
inline std::vector<VecX> euclid_singular_points() {
  return {Vec3(0.0, 0.0, 0.0), Vec3(0.0, 0.0, 1.3), Vec3(0.7, -0.4, 0.0)};
}

/**
 * Sphere points on the usual singular sets, as null 5-vectors: the poles
 * (1,±1,0,0,0), the circles n₄ = n₅ = 0 and n₂ = n₃ = 0, the great sphere
 * n₅ = 0, p₀ and the image of the origin.
 */
inline std::vector<VecX> sphere_singular_points() {
  const Eigen::Vector4d dirs[] = {{1, 0, 0, 0},  {-1, 0, 0, 0},     {0.6, 0.8, 0, 0}, {0, 0, 0.6, 0.8},
                                  {0.36, 0.48, 0.8, 0}, {0, 0, 0, -1}, {0, 0, 0, 1}};
  std::vector<VecX> out;
  for (const auto& d : dirs) out.emplace_back(SpherePoint::from_unit4(d).n());
  return out;
}

inline std::vector<VecX> singular_points(Model m) {
  return m == Model::Euclid ? euclid_singular_points() : sphere_singular_points();
}

/// Seeded sampler: standard Gaussian in E³, uniform on S³.
class PointSampler {
 public:
  PointSampler(Model model, std::uint64_t seed) : model_(model), rng_(seed) {}

  VecX next() {
    if (model_ == Model::Euclid) return Vec3(normal_(rng_), normal_(rng_), normal_(rng_));
    Eigen::Vector4d u;
    do {
      u = Eigen::Vector4d(normal_(rng_), normal_(rng_), normal_(rng_), normal_(rng_));
    } while (u.norm() < 1e-12);
    return SpherePoint::from_unit4(u).n();
  }

 private:
  Model model_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

/**
 * @brief Generic orbit dimension and the strata met along the way.
 *
 * `samples` random points plus the `forced` points are evaluated. Forced
 * points only add strata: they are real points of the space, so they can
 * never raise max_dim above the true generic dimension.
 */
inline OrbitReport cohomogeneity(const AnySubalgebra& g, std::size_t samples = kDefaultSamples,
                                 std::uint64_t seed = kDefaultSeed, Tolerances tol = {},
                                 const std::vector<VecX>& forced = {}) {
  OrbitReport report;
  report.model = model_of(g);
  report.sampler_seed = seed;
  report.samples = samples;
  auto record = [&](const VecX& p, bool is_forced) {
    const int d = orbit_dim_at(g, p, tol);
    auto it = std::find_if(report.strata.begin(), report.strata.end(), [d](const Stratum& s) { return s.dim == d; });
    if (it == report.strata.end()) {
      report.strata.push_back({d, 0, p, 0});
      it = std::prev(report.strata.end());
    }
    ++it->count;
    if (is_forced) ++it->forced;
  };
  PointSampler sampler(report.model, seed);
  for (std::size_t i = 0; i < samples; ++i) record(sampler.next(), false);
  for (const auto& p : forced) record(p, true);
  std::sort(report.strata.begin(), report.strata.end(), [](const Stratum& a, const Stratum& b) { return a.dim < b.dim; });
  report.max_dim = report.strata.empty() ? 0 : report.strata.back().dim;
  report.cohomogeneity = 3 - report.max_dim;
  return report;
}

inline OrbitReport cohomogeneity_with_singular(const AnySubalgebra& g, std::size_t samples = kDefaultSamples,
                                               std::uint64_t seed = kDefaultSeed, Tolerances tol = {}) {
  return cohomogeneity(g, samples, seed, tol, singular_points(model_of(g)));
}

struct EquivalenceReport {
  bool equivalent = true;
  /// Largest principal-angle distance between the tangent spans.
  double max_distance = 0.0;
  std::size_t samples = 0;
  std::optional<VecX> first_mismatch;
};

/// Orthonormal basis of the tangent space of the orbit through p.
inline MatX tangent_span(const AnySubalgebra& g, const VecX& p, Tolerances tol = {}) {
  if (model_of(g) == Model::Euclid) {
    if (p.size() != 3) throw Error(ErrorCode::ModelMismatch, "Euclidean orbit needs a 3-vector");
    const auto& e = as_euclid(g);
    if (e.empty()) return MatX(3, 0);
    return column_space(euclid_fields(e, EuclidPoint(p)), tol.rank);
  }
  if (p.size() != 5) throw Error(ErrorCode::ModelMismatch, "sphere orbit needs a 5-vector");
  const auto& l = as_lorentz(g);
  return sphere_tangent_span(std::span<const LorentzAlgElement>(l.basis()), sphere_normalize(Vec5(p), tol.eps),
                             tol.rank);
}

/// Same orbits, judged by equal tangent spans at every sampled point.
inline EquivalenceReport orbits_equivalent(const AnySubalgebra& g1, const AnySubalgebra& g2,
                                           std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed,
                                           Tolerances tol = {}) {
  if (model_of(g1) != model_of(g2)) throw Error(ErrorCode::ModelMismatch, "subalgebras live in different models");
  EquivalenceReport report;
  report.samples = samples;
  PointSampler sampler(model_of(g1), seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const VecX p = sampler.next();
    const double d = subspace_distance(tangent_span(g1, p, tol), tangent_span(g2, p, tol));
    report.max_distance = std::max(report.max_distance, d);
    if (d > tol.rank && report.equivalent) {
      report.equivalent = false;
      report.first_mismatch = p;
    }
  }
  return report;
}

struct PointCloud {
  Model model = Model::Euclid;
  std::vector<VecX> points;
  std::string group_label;
  std::optional<double> parameter;
  VecX base_point;
  std::uint64_t seed = kDefaultSeed;
};

/**
 * @brief Sample of the orbit through p.
 *
 * Each point is p moved by a product of dim 𝔤 exponentials exp(tᵢξᵢ) with
 * unit-norm random ξᵢ ∈ 𝔤 and |tᵢ| ≤ t_max. Every point is checked to have
 * the orbit dimension of p; a mismatch raises InternalInconsistency.
 */
inline PointCloud orbit_cloud(const AnySubalgebra& g, const VecX& p, std::size_t steps, double t_max = 1.0,
                              std::uint64_t seed = kDefaultSeed, Tolerances tol = {}) {
  PointCloud cloud;
  cloud.model = model_of(g);
  cloud.seed = seed;
  const int base_dim = orbit_dim_at(g, p, tol);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> time(-t_max, t_max);

  auto random_coeffs = [&](std::size_t n) {
    VecX c(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = normal(rng);
    return VecX(c / c.norm());
  };

  if (cloud.model == Model::Euclid) {
    const auto& e = as_euclid(g);
    if (p.size() != 3) throw Error(ErrorCode::ModelMismatch, "Euclidean orbit needs a 3-vector");
    cloud.base_point = p;
    for (std::size_t s = 0; s < steps; ++s) {
      EuclidPoint x = p;
      for (std::size_t k = 0; k < std::max<std::size_t>(1, e.dim()); ++k) {
        if (e.empty()) break;
        const VecX c = random_coeffs(e.dim());
        ConfAlgElement xi = e.basis()[0] * c(0);
        for (std::size_t i = 1; i < e.dim(); ++i) xi = xi + e.basis()[i] * c(static_cast<Eigen::Index>(i));
        x = act(exp(xi, time(rng)), x);
      }
      cloud.points.emplace_back(x);
    }
  } else {
    const auto& l = as_lorentz(g);
    if (p.size() != 5) throw Error(ErrorCode::ModelMismatch, "sphere orbit needs a 5-vector");
    const SpherePoint base = sphere_normalize(Vec5(p), tol.eps);
    cloud.base_point = base.n();
    for (std::size_t s = 0; s < steps; ++s) {
      SpherePoint x = base;
      for (std::size_t k = 0; k < std::max<std::size_t>(1, l.dim()); ++k) {
        if (l.empty()) break;
        const VecX c = random_coeffs(l.dim());
        LorentzAlgElement xi = l.basis()[0] * c(0);
        for (std::size_t i = 1; i < l.dim(); ++i) xi = xi + l.basis()[i] * c(static_cast<Eigen::Index>(i));
        x = act_sphere(exp(xi, time(rng)), x, tol.eps);
      }
      cloud.points.emplace_back(x.n());
    }
  }
  for (const auto& q : cloud.points)
    if (orbit_dim_at(g, q, tol) != base_dim)
      throw Error(ErrorCode::InternalInconsistency, "cloud point left the orbit stratum (tolerance failure)");
  return cloud;
}

struct InvariantReport {
  std::string label;
  std::string quantity;
  double reference = 0.0;
  double max_deviation = 0.0;
  std::size_t points = 0;
};

namespace invariant_detail {

inline double wrap_angle(double x) { return std::remainder(x, 2.0 * std::numbers::pi); }

/// Vanishing is preserved as |value|; a nonzero value only keeps its sign.
inline double sign_or_zero(double base, double value, double zero_tol) {
  if (std::abs(base) <= zero_tol) return std::abs(value);
  return (value > 0.0) == (base > 0.0) ? 0.0 : 1.0;
}

}  // namespace invariant_detail

/**
 * @brief Evaluates the conserved quantity registered for `label` on the cloud.
 *
 * Throws UnknownInvariant for labels without one (the transitive groups among
 * them).
 */
inline InvariantReport invariant_check(const std::string& label, const PointCloud& cloud) {
  using invariant_detail::sign_or_zero;
  using invariant_detail::wrap_angle;
  const std::string canon = canonical_label(label);
  InvariantReport r;
  r.label = canon;
  r.points = cloud.points.size();
  const VecX& b = cloud.base_point;
  constexpr double zero_tol = 1e-12;

  // Each entry: quantity name, value on a point, deviation from the base value.
  std::function<double(const VecX&)> value;
  std::function<double(double, double)> deviation = [](double ref, double v) { return std::abs(v - ref); };

  if (cloud.model == Model::Euclid) {
    if (canon == "SO(3)") {
      r.quantity = "|p|";
      value = [](const VecX& p) { return p.norm(); };
    } else if (canon == "SO(2)xL") {
      r.quantity = "x^2+y^2";
      value = [](const VecX& p) { return p(0) * p(0) + p(1) * p(1); };
    } else if (canon == "P" || canon == "SO(2)|xP") {
      r.quantity = "z";
      value = [](const VecX& p) { return p(2); };
    } else if (canon == "R+*|xL") {
      r.quantity = "atan2(y,x)";
      value = [](const VecX& p) { return std::atan2(p(1), p(0)); };
      deviation = [](double ref, double v) { return std::abs(wrap_angle(v - ref)); };
    } else if (canon == "Na|xL") {
      const double a = cloud.parameter.value_or(1.0);
      r.quantity = "theta+log(r)/a";
      value = [a](const VecX& p) { return std::atan2(p(1), p(0)) + std::log(std::hypot(p(0), p(1))) / a; };
      deviation = [](double ref, double v) { return std::abs(wrap_angle(v - ref)); };
    } else if (canon == "R+*xSO(2)") {
      r.quantity = "atan2(z,rho)";
      value = [](const VecX& p) { return std::atan2(p(2), std::hypot(p(0), p(1))); };
    } else if (canon == "R+*|xP" || canon == "Na|xP" || canon == "(R+*xSO(2))|xP") {
      r.quantity = "sign(z)";
      value = [](const VecX& p) { return p(2); };
      deviation = [](double ref, double v) { return sign_or_zero(ref, v, zero_tol); };
    }
  } else {
    if (canon == "SO(2)xSO(2)") {
      r.quantity = "n2^2+n3^2";
      value = [](const VecX& n) { return n(1) * n(1) + n(2) * n(2); };
    } else if (canon == "SO(3)-block") {
      r.quantity = "n2";
      value = [](const VecX& n) { return n(1); };
    } else if (canon == "SO0(1,2)") {
      r.quantity = "atan2(n5,n4)";
      value = [](const VecX& n) { return std::atan2(n(4), n(3)); };
      deviation = [](double ref, double v) { return std::abs(wrap_angle(v - ref)); };
    } else if (canon == "SO0(1,3)") {
      r.quantity = "sign(n5)";
      value = [](const VecX& n) { return n(4); };
      deviation = [](double ref, double v) { return sign_or_zero(ref, v, zero_tol); };
    }
  }
  if (!value) throw Error(ErrorCode::UnknownInvariant, "no conserved quantity registered for " + canon);

  r.reference = value(b);
  for (const auto& p : cloud.points) r.max_deviation = std::max(r.max_deviation, deviation(r.reference, value(p)));
  return r;
}

}  // namespace confact
