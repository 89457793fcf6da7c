#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "confact/bridge.hpp"
#include "confact/catalog.hpp"
#include "confact/orbit.hpp"
#include "confact/random.hpp"
#include "confact/reduction.hpp"

using namespace confact;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no confact::Error thrown";
  return ErrorCode::InvariantViolation;
}

LorentzSubalgebra sphere_group(const std::string& label) { return as_lorentz(catalog_get(label).generators); }

}  // namespace

TEST(Lorentz, GeneratorsPreserveForm) {
  for (int j = 1; j < 5; ++j) EXPECT_NO_THROW(LorentzAlgElement(lorentz_gen::boost(j).matrix()));
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) EXPECT_NO_THROW(LorentzAlgElement(lorentz_gen::rotation(i, j).matrix()));
  EXPECT_EQ(code_of([] { LorentzAlgElement(Mat5(Mat5::Identity())); }), ErrorCode::InvariantViolation);
}

TEST(Lorentz, CoordinatesRoundTrip) {
  rnd::Rng rng(11);
  const LorentzAlgElement x = rnd::lorentz_alg(rng);
  EXPECT_EQ(LorentzAlgElement::from_coords(x.coords()).matrix(), x.matrix());
}

TEST(Lorentz, ExpMatchesEigenAndPreservesForm) {
  rnd::Rng rng(12);
  const Mat5 j = minkowski_gram();
  for (int k = 0; k < 100; ++k) {
    const LorentzAlgElement x = rnd::lorentz_alg(rng);
    const double t = rnd::uniform(rng, -1.5, 1.5);
    const Mat5 g = exp(x, t).matrix();
    const Mat5 oracle = Mat5(t * x.matrix()).exp();
    EXPECT_LT((g - oracle).norm() / oracle.norm(), 1e-11);
    EXPECT_LT((g.transpose() * j * g - j).norm() / g.squaredNorm(), 1e-13);
    EXPECT_LT((inverse(exp(x, t)).matrix() * g - Mat5::Identity()).norm(), 1e-8);
  }
}

TEST(Lorentz, MatrixValidation) {
  Mat5 m = Mat5::Identity();
  m(0, 0) = 2.0;
  EXPECT_EQ(code_of([&] { LorentzMatrix{m}; }), ErrorCode::InvariantViolation);
}

TEST(Lorentz, AdjointIsConjugation) {
  rnd::Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const LorentzMatrix g = exp(rnd::lorentz_alg(rng), 0.7);
    const LorentzAlgElement x = rnd::lorentz_alg(rng);
    const Mat5 expected = g.matrix() * x.matrix() * g.matrix().inverse();
    EXPECT_LT((adjoint(g, x).matrix() - expected).norm() / expected.norm(), 1e-10);
  }
}

TEST(SpherePoint, NormalizeErrorsAndScale) {
  EXPECT_EQ(code_of([] { sphere_normalize(Vec5::Zero()); }), ErrorCode::ZeroVector);
  Vec5 v;
  v << 1, 1, 1, 0, 0;
  EXPECT_EQ(code_of([&] { sphere_normalize(v); }), ErrorCode::NotNull);
  v << 3, 0, 3, 0, 0;
  const SpherePoint s = sphere_normalize(v);
  EXPECT_DOUBLE_EQ(s.n()(0), 1.0);
  EXPECT_NEAR(s.unit4().norm(), 1.0, 1e-15);
}

TEST(SpherePoint, OrbitDimensions) {
  rnd::Rng rng(14);
  const SpherePoint s = rnd::sphere_point(rng);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO0(1,4)"), s), 3);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO(4)"), s), 3);
  const std::vector<LorentzAlgElement> one = {lorentz_gen::rotation(1, 2)};
  EXPECT_EQ(sphere_orbit_dim(one, s), 1);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO(3)-block"), SpherePoint::from_unit4({1, 0, 0, 0})), 0);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO(2)xSO(2)"), SpherePoint::from_unit4({0.6, 0.8, 0, 0})), 1);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO(2)xSO(2)"), SpherePoint::from_unit4({0, 0, 0.6, 0.8})), 1);
  EXPECT_EQ(orbit_dim_at(sphere_group("SO0(1,2)"), SpherePoint::from_unit4({0.6, 0.8, 0, 0})), 1);
}

TEST(Bridge, PointEmbedding) {
  const SpherePoint o = embed_point(Vec3::Zero());
  Vec5 expected;
  expected << 1, 0, 0, 0, 1;
  EXPECT_EQ(o.n(), expected);
  EXPECT_FALSE(unembed(infinity_point()).has_value());
  ASSERT_TRUE(unembed(SpherePoint::unchecked(expected)).has_value());
  EXPECT_EQ(*unembed(SpherePoint::unchecked(expected)), Vec3::Zero());
  rnd::Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    const Vec3 x = 3.0 * rnd::gaussian3(rng);
    EXPECT_NEAR(q_form(embed_point(x).n()), 0.0, 1e-12);
    EXPECT_LT((*unembed(embed_point(x)) - x).norm(), 1e-9 * std::max(1.0, x.norm()));
  }
}

TEST(Bridge, GroupEmbedding) {
  EXPECT_LT((embed_conf(ConfElement::identity()).matrix() - Mat5::Identity()).norm(), 1e-15);
  rnd::Rng rng(16);
  const Mat3 r = rnd::rotation(rng);
  const Mat5 m = embed_conf(ConfElement::rotation(r)).matrix();
  EXPECT_LT((m.block<3, 3>(1, 1) - r).norm(), 1e-15);
  EXPECT_NEAR(m(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(m(4, 4), 1.0, 1e-15);
  EXPECT_NEAR(m.row(0).tail<4>().norm() + m.col(0).tail<4>().norm(), 0.0, 1e-15);

  EXPECT_EQ(code_of([] { embed_conf(ConfElement::homothety(-1.0)); }), ErrorCode::OutsideIdentityComponent);
  Mat3 flip = Mat3::Identity();
  flip(2, 2) = -1;
  EXPECT_EQ(code_of([&] { embed_conf(ConfElement::rotation(flip)); }), ErrorCode::OutsideIdentityComponent);

  for (int k = 0; k < 200; ++k) {
    const ConfElement g = rnd::proper_similarity(rng);
    const LorentzMatrix lg = embed_conf(g);
    const Mat5 j = minkowski_gram();
    EXPECT_LT((lg.matrix().transpose() * j * lg.matrix() - j).norm() / lg.matrix().squaredNorm(), 1e-13);
    const Vec3 x = rnd::gaussian3(rng);
    EXPECT_LT((act_sphere(lg, embed_point(x)).n() - embed_point(act(g, x)).n()).norm(), 1e-10);
    const Vec5 p0 = lg.matrix() * infinity_point().n();
    EXPECT_LT((p0 - p0(0) * infinity_point().n()).norm(), 1e-10 * p0.norm());
  }
}

TEST(Bridge, AlgebraEmbedding) {
  EXPECT_LT((embed_alg(gen::lambda()).matrix() + lorentz_gen::boost(4).matrix()).norm(), 1e-15);
  EXPECT_LT((embed_alg(gen::X()).matrix() - lorentz_gen::rotation(1, 2).matrix()).norm(), 1e-15);
  rnd::Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng);
    const Mat5 lhs = embed_alg(bracket(x, y)).matrix();
    const Mat5 rhs = bracket(embed_alg(x), embed_alg(y)).matrix();
    EXPECT_LT((lhs - rhs).norm(), 1e-12);
    const Vec5 mp = embed_alg(x).matrix() * infinity_point().n();
    EXPECT_LT((mp - mp(0) * infinity_point().n()).norm(), 1e-13);
  }
}

TEST(Bridge, AlgebraEmbeddingIsDerivative) {
  rnd::Rng rng(18);
  for (int k = 0; k < 50; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng);
    const double h = 1e-5;
    const Mat5 fd = (embed_conf(exp(x, h)).matrix() - embed_conf(exp(x, -h)).matrix()) / (2 * h);
    EXPECT_LT((fd - embed_alg(x).matrix()).norm(), 1e-6);
  }
}

TEST(Bridge, OrbitDimensionsIntertwine) {
  rnd::Rng rng(19);
  for (const auto& label : euclid_labels()) {
    const auto g = as_euclid(catalog_get(label, is_n_family(label) ? std::optional<double>(1.3) : std::nullopt).generators);
    const auto lifted = embed_alg(g.basis());
    for (int k = 0; k < 20; ++k) {
      const Vec3 x = rnd::gaussian3(rng);
      EXPECT_EQ(orbit_dim_at(g, x), sphere_orbit_dim(lifted, embed_point(x))) << label;
    }
    EXPECT_EQ(orbit_dim_at(g, Vec3::Zero()), sphere_orbit_dim(lifted, embed_point(Vec3::Zero()))) << label;
  }
}

TEST(Reduction, CatalogBranches) {
  EXPECT_EQ(reduction_scan(sphere_group("SO0(1,4)")).primary, ReductionBranch::Irreducible);
  for (const char* label : {"SO(4)", "SO(3)-block", "SO(2)xSO(2)"}) {
    const ReductionReport r = reduction_scan(sphere_group(label));
    EXPECT_EQ(r.primary, ReductionBranch::FixedHyperbolicPoint) << label;
    ASSERT_TRUE(r.fixed_hyperbolic_point.has_value());
    EXPECT_NEAR(std::abs((*r.fixed_hyperbolic_point)(0)), 1.0, 1e-12);
  }
  const ReductionReport so13 = reduction_scan(sphere_group("SO0(1,3)"));
  EXPECT_EQ(so13.primary, ReductionBranch::InvariantPositiveDefinite);
  EXPECT_EQ(so13.positive_definite_dim, 1);
  const ReductionReport so12so2 = reduction_scan(sphere_group("SO0(1,2)xSO(2)"));
  EXPECT_EQ(so12so2.primary, ReductionBranch::InvariantPositiveDefinite);
  EXPECT_EQ(so12so2.positive_definite_dim, 2);
}

TEST(Reduction, FixedNullLineOfSimilarities) {
  for (const char* label : {"R3", "P", "SO(3)|xR3", "S|xP"}) {
    const auto g = as_euclid(catalog_get(label).generators);
    const ReductionReport r = reduction_scan(embed_alg(g.basis()));
    EXPECT_EQ(r.primary, ReductionBranch::FixedSpherePoint) << label;
    ASSERT_TRUE(r.fixed_sphere_point.has_value());
    const Vec5 p = *r.fixed_sphere_point;
    EXPECT_LT((p / p(0) - infinity_point().n()).norm(), 1e-8) << label;
  }
}

TEST(Reduction, So12Subgroups) {
  const auto subs = catalog_get("SO0(1,2)").sub_entries;
  ASSERT_EQ(subs.size(), 4u);
  for (const auto& s : subs) {
    EXPECT_TRUE(closure_check(s.generators).passed) << s.label;
    const ReductionReport r = reduction_scan(s.generators);
    if (s.label == "E") EXPECT_EQ(r.primary, ReductionBranch::FixedHyperbolicPoint);
    else EXPECT_EQ(r.primary, ReductionBranch::FixedSpherePoint) << s.label;
  }
}

TEST(Reduction, ConjugationInvariant) {
  rnd::Rng rng(20);
  for (const auto& label : lorentz_labels()) {
    const LorentzSubalgebra g = sphere_group(label);
    const ReductionReport base = reduction_scan(g);
    for (int k = 0; k < 5; ++k) {
      const LorentzMatrix h = exp(rnd::lorentz_alg(rng), 0.5);
      std::vector<LorentzAlgElement> conj;
      for (const auto& b : g.basis()) conj.push_back(adjoint(h, b));
      const ReductionReport r = reduction_scan(conj);
      EXPECT_EQ(r.primary, base.primary) << label;
      EXPECT_EQ(r.positive_definite_dim, base.positive_definite_dim) << label;
    }
  }
}

TEST(Reduction, RejectsNonClosedSet) {
  const std::vector<LorentzAlgElement> gens = {lorentz_gen::boost(1), lorentz_gen::rotation(1, 2)};
  EXPECT_EQ(code_of([&] { reduction_scan(gens); }), ErrorCode::NotASubalgebra);
}
