#pragma once

#include <random>

#include <Eigen/QR>

#include "confact/euclid.hpp"
#include "confact/lorentz.hpp"

namespace confact::rnd {

using Rng = std::mt19937_64;

inline double normal(Rng& rng) { return std::normal_distribution<double>()(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Vec3 gaussian3(Rng& rng) { return {normal(rng), normal(rng), normal(rng)}; }

/// Haar-distributed rotation.
inline Mat3 rotation(Rng& rng) {
  Mat3 g;
  for (int i = 0; i < 9; ++i) g(i / 3, i % 3) = normal(rng);
  Eigen::HouseholderQR<Mat3> qr(g);
  Mat3 q = qr.householderQ();
  const Mat3 r = qr.matrixQR();
  for (int i = 0; i < 3; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

/// Rotation or, with probability 1/2, a reflection.
inline Mat3 orthogonal(Rng& rng) {
  Mat3 q = rotation(rng);
  if (std::bernoulli_distribution(0.5)(rng)) q.col(2) *= -1.0;
  return q;
}

/// (α, A, v) with |α| ∈ [0.1, bound], either sign, A ∈ O(3), v ∈ [−bound, bound]³.
inline ConfElement similarity(Rng& rng, double bound = 5.0) {
  double alpha = uniform(rng, 0.1, bound);
  if (std::bernoulli_distribution(0.5)(rng)) alpha = -alpha;
  const Vec3 v(uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound));
  return ConfElement(alpha, orthogonal(rng), v);
}

/// Element of the identity component: α > 0, A ∈ SO(3).
inline ConfElement proper_similarity(Rng& rng, double bound = 5.0) {
  const Vec3 v(uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound));
  return ConfElement(uniform(rng, 0.1, bound), rotation(rng), v);
}

inline ConfAlgElement conf_alg(Rng& rng) {
  EuclidCoords c;
  for (int i = 0; i < 7; ++i) c(i) = normal(rng);
  return ConfAlgElement::from_coords(c);
}

inline LorentzAlgElement lorentz_alg(Rng& rng) {
  LorentzCoords c;
  for (int i = 0; i < 10; ++i) c(i) = normal(rng);
  return LorentzAlgElement::from_coords(c);
}

/// Uniform point of S³.
inline SpherePoint sphere_point(Rng& rng) {
  Eigen::Vector4d u(normal(rng), normal(rng), normal(rng), normal(rng));
  return SpherePoint::from_unit4(u);
}

}  // namespace confact::rnd
