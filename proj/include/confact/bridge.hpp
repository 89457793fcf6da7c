#pragma once

#include <optional>

#include "confact/euclid.hpp"
#include "confact/lorentz.hpp"

namespace confact {

/**
 * Conformal compactification of E³ inside the projectivized null cone.
 *
 * Light-cone coordinates: u₊ = v₁ + v₅, u₋ = v₁ − v₅, so that
 * q = −u₊u₋ + v₂² + v₃² + v₄². A point x is sent to the null line through
 * (u₊, x, u₋) = (1, x, ‖x‖²) and the point at infinity is p₀ = [1,0,0,0,−1].
 */
namespace bridge {

/// Change of coordinates v ↦ (u₊, v₂, v₃, v₄, u₋).
inline Mat5 to_light_cone() {
  Mat5 c = Mat5::Identity();
  c(0, 4) = 1.0;
  c(4, 0) = 1.0;
  c(4, 4) = -1.0;
  return c;
}

inline Mat5 from_light_cone() {
  Mat5 c = Mat5::Identity();
  c(0, 0) = 0.5;
  c(0, 4) = 0.5;
  c(4, 0) = 0.5;
  c(4, 4) = -0.5;
  return c;
}

inline Mat5 conjugate_from_light_cone(const Mat5& light_cone) {
  return from_light_cone() * light_cone * to_light_cone();
}

}  // namespace bridge

/// Direction fixed by every embedded similarity.
inline SpherePoint infinity_point() {
  Vec5 p;
  p << 1.0, 0.0, 0.0, 0.0, -1.0;
  return SpherePoint::unchecked(p);
}

/// ι(x) = [(1+‖x‖²)/2, x₁, x₂, x₃, (1−‖x‖²)/2].
inline SpherePoint embed_point(const EuclidPoint& x, double eps = Tolerances{}.eps) {
  const double r2 = x.squaredNorm();
  Vec5 raw;
  raw << 0.5 * (1.0 + r2), x, 0.5 * (1.0 - r2);
  return sphere_normalize(raw, eps);
}

/// Inverse of embed_point; std::nullopt means the point at infinity.
inline std::optional<EuclidPoint> unembed(const SpherePoint& s, double eps = Tolerances{}.eps) {
  const Vec5& n = s.n();
  const double u_plus = n(0) + n(4);
  if (u_plus <= eps * n(0)) return std::nullopt;
  return EuclidPoint(n.segment<3>(1) / u_plus);
}

/**
 * @brief The extension of a similarity to S³, as an element of SO₀(1,4) fixing p₀.
 *
 * Built in light-cone coordinates as translation ∘ rotation ∘ homothety.
 * Only identity-component similarities (alpha > 0, det A = 1) are accepted.
 */
inline LorentzMatrix embed_conf(const ConfElement& g) {
  if (!(g.alpha() > 0.0) || g.A().determinant() < 0.0)
    throw Error(ErrorCode::OutsideIdentityComponent, "similarity is not in the identity component");
  Mat5 homothety = Mat5::Identity();
  homothety(0, 0) = 1.0 / g.alpha();
  homothety(4, 4) = g.alpha();

  Mat5 rotation = Mat5::Identity();
  rotation.block<3, 3>(1, 1) = g.A();

  const Vec3& w = g.v();
  Mat5 translation = Mat5::Identity();
  translation.block<3, 1>(1, 0) = w;
  translation(4, 0) = w.squaredNorm();
  translation.block<1, 3>(4, 1) = 2.0 * w.transpose();

  return LorentzMatrix::unchecked(bridge::conjugate_from_light_cone(translation * rotation * homothety));
}

/// Differential of embed_conf: the so(1,4) element of a similarity generator.
inline LorentzAlgElement embed_alg(const ConfAlgElement& x) {
  Mat5 m = Mat5::Zero();
  m(0, 0) = -x.a();
  m(4, 4) = x.a();
  m.block<3, 3>(1, 1) = x.V();
  m.block<3, 1>(1, 0) = x.w();
  m.block<1, 3>(4, 1) = 2.0 * x.w().transpose();
  return LorentzAlgElement::unchecked(bridge::conjugate_from_light_cone(m));
}

inline std::vector<LorentzAlgElement> embed_alg(const std::vector<ConfAlgElement>& xs) {
  std::vector<LorentzAlgElement> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(embed_alg(x));
  return out;
}

}  // namespace confact
