#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "confact/catalog.hpp"
#include "confact/orbit.hpp"
#include "confact/random.hpp"

namespace confact::props {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  /// Largest normalized residual; for integer checks, the number of mismatches.
  double max_residual = 0.0;
};

inline double rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / std::max(1.0, std::max(a.norm(), b.norm()));
}

inline std::vector<ConfAlgElement> conj(const ConfElement& h, const std::vector<ConfAlgElement>& xs) {
  std::vector<ConfAlgElement> out;
  for (const auto& x : xs) out.push_back(adjoint(h, x));
  return out;
}

inline std::vector<LorentzAlgElement> conj(const LorentzMatrix& h, const std::vector<LorentzAlgElement>& xs) {
  std::vector<LorentzAlgElement> out;
  for (const auto& x : xs) out.push_back(adjoint(h, x));
  return out;
}

inline SuiteResult group_axioms(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"group axioms", n};
  rnd::Rng rng(seed);
  const ConfElement e = ConfElement::identity();
  for (std::size_t i = 0; i < n; ++i) {
    const ConfElement g = rnd::similarity(rng), h = rnd::similarity(rng), k = rnd::similarity(rng);
    r.max_residual = std::max({r.max_residual, rel(((g * h) * k).matrix(), (g * (h * k)).matrix()),
                               rel((g * e).matrix(), g.matrix()), rel((e * g).matrix(), g.matrix()),
                               rel((g * inverse(g)).matrix(), e.matrix()), rel((inverse(g) * g).matrix(), e.matrix())});
  }
  return r;
}

inline SuiteResult jacobi(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"Jacobi identity", n};
  rnd::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng), z = rnd::conf_alg(rng);
    const ConfAlgElement s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    r.max_residual = std::max(r.max_residual, s.coords().norm() / (x.coords().norm() * y.coords().norm() * z.coords().norm()));
    const LorentzAlgElement a = rnd::lorentz_alg(rng), b = rnd::lorentz_alg(rng), c = rnd::lorentz_alg(rng);
    const LorentzAlgElement t = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    r.max_residual = std::max(r.max_residual, t.matrix().norm() / (a.matrix().norm() * b.matrix().norm() * c.matrix().norm()));
  }
  return r;
}

inline SuiteResult adjoint_morphisms(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"Ad homomorphism and bracket automorphism", n};
  rnd::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const ConfElement g = rnd::similarity(rng), h = rnd::similarity(rng);
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng);
    r.max_residual = std::max({r.max_residual, rel(adjoint(g * h, x).coords(), adjoint(g, adjoint(h, x)).coords()),
                               rel(adjoint(g, bracket(x, y)).coords(), bracket(adjoint(g, x), adjoint(g, y)).coords())});
    const LorentzMatrix lg = exp(rnd::lorentz_alg(rng), 0.5), lh = exp(rnd::lorentz_alg(rng), 0.5);
    const LorentzAlgElement a = rnd::lorentz_alg(rng), b = rnd::lorentz_alg(rng);
    r.max_residual = std::max({r.max_residual, rel(adjoint(lg * lh, a).matrix(), adjoint(lg, adjoint(lh, a)).matrix()),
                               rel(adjoint(lg, bracket(a, b)).matrix(), bracket(adjoint(lg, a), adjoint(lg, b)).matrix())});
  }
  return r;
}

inline SuiteResult projection_morphisms(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"projection morphisms", n};
  rnd::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng);
    const Mat3 vx = project_li(x), vy = project_li(y);
    r.max_residual = std::max({r.max_residual, rel(project_l(bracket(x, y)).coords(), bracket(project_l(x), project_l(y)).coords()),
                               rel(project_li(bracket(x, y)), Mat3(vx * vy - vy * vx)),
                               std::abs(project_h(bracket(x, y)))});
  }
  return r;
}

inline SuiteResult q_invariance(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"q-form invariance under exp", n};
  rnd::Rng rng(seed);
  const Mat5 j = minkowski_gram();
  for (std::size_t i = 0; i < n; ++i) {
    const LorentzAlgElement x = rnd::lorentz_alg(rng);
    const Mat5 g = exp(x, rnd::uniform(rng, -1.0, 1.0)).matrix();
    Vec5 v, w;
    for (int k = 0; k < 5; ++k) {
      v(k) = rnd::normal(rng);
      w(k) = rnd::normal(rng);
    }
    const double scale = g.squaredNorm() * v.norm() * w.norm();
    r.max_residual = std::max({r.max_residual, (g.transpose() * j * g - j).norm() / g.squaredNorm(),
                               std::abs(q_form(g * v, g * w) - q_form(v, w)) / scale});
  }
  return r;
}

/// Mismatch count of orbit_dim_at(g, p) against orbit_dim_at(Ad_h g, h·p), both models.
inline SuiteResult orbit_dim_conjugation(std::size_t n, std::uint64_t seed) {
  SuiteResult r{"orbit-dimension conjugation invariance", n};
  rnd::Rng rng(seed);
  const auto elabels = euclid_labels();
  const auto llabels = lorentz_labels();
  const auto espec = euclid_singular_points();
  const auto sspec = sphere_singular_points();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& el = elabels[i % elabels.size()];
    const auto g = as_euclid(catalog_get(el, is_n_family(el) ? std::optional<double>(1.0) : std::nullopt).generators);
    const ConfElement h = rnd::similarity(rng);
    const EuclidSubalgebra hg(conj(h, g.basis()));
    const Vec3 p = i % 4 == 0 ? Vec3(espec[(i / 4) % espec.size()]) : rnd::gaussian3(rng);
    if (orbit_dim_at(g, p) != orbit_dim_at(hg, act(h, p))) ++mismatches;

    const std::string& ll = llabels[i % llabels.size()];
    const auto lg = as_lorentz(catalog_get(ll).generators);
    const LorentzMatrix lh = exp(rnd::lorentz_alg(rng), 0.5);
    const LorentzSubalgebra hlg(conj(lh, lg.basis()));
    const SpherePoint s = i % 4 == 0 ? sphere_normalize(Vec5(sspec[(i / 4) % sspec.size()])) : rnd::sphere_point(rng);
    if (orbit_dim_at(lg, s) != orbit_dim_at(hlg, act_sphere(lh, s, 1e-6))) ++mismatches;
  }
  r.max_residual = static_cast<double>(mismatches);
  return r;
}

inline std::vector<SuiteResult> all_suites(std::size_t n = 1000, std::uint64_t seed = kDefaultSeed) {
  return {group_axioms(n, seed),         jacobi(n, seed + 1),      adjoint_morphisms(n, seed + 2),
          projection_morphisms(n, seed + 3), q_invariance(n, seed + 4), orbit_dim_conjugation(n, seed + 5)};
}

}  // namespace confact::props
