#include <gtest/gtest.h>

#include <sstream>

#include "confact/catalog.hpp"
#include "confact/document.hpp"
#include "confact/orbit.hpp"
#include "confact/random.hpp"

using namespace confact;

namespace {

AnySubalgebra group(const std::string& label, double a = 1.0) {
  return catalog_get(label, is_n_family(canonical_label(label)) ? std::optional<double>(a) : std::nullopt).generators;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no confact::Error thrown";
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(OrbitDim, Examples) {
  rnd::Rng rng(31);
  const auto sp = as_euclid(group("S|xP"));
  for (int k = 0; k < 20; ++k) EXPECT_EQ(orbit_dim_at(sp, rnd::gaussian3(rng)), 3);
  const auto nap = as_euclid(group("Na|xP"));
  EXPECT_EQ(orbit_dim_at(nap, Vec3(0.4, -1.0, 0.0)), 2);
  EXPECT_EQ(orbit_dim_at(nap, Vec3(0.4, -1.0, 0.3)), 3);
  EXPECT_EQ(orbit_dim_at(as_euclid(group("SO(3)")), Vec3::Zero()), 0);
  EXPECT_EQ(code_of([] { orbit_dim_at(group("SO(3)"), VecX::Zero(5)); }), ErrorCode::ModelMismatch);
}

TEST(OrbitDim, ConjugationInvariant) {
  rnd::Rng rng(32);
  for (const auto& label : euclid_labels()) {
    const auto g = as_euclid(group(label));
    for (int k = 0; k < 10; ++k) {
      const ConfElement h = rnd::similarity(rng);
      std::vector<ConfAlgElement> conj;
      for (const auto& b : g.basis()) conj.push_back(adjoint(h, b));
      const EuclidSubalgebra hg(conj);
      for (const Vec3& p : {rnd::gaussian3(rng), Vec3(0, 0, 0), Vec3(0, 0, 1.1), Vec3(0.5, 0.2, 0)})
        EXPECT_EQ(orbit_dim_at(g, p), orbit_dim_at(hg, act(h, p))) << label;
    }
  }
}

TEST(Cohomogeneity, Examples) {
  const OrbitReport p = cohomogeneity(group("P"));
  EXPECT_EQ(p.max_dim, 2);
  EXPECT_EQ(p.cohomogeneity, 1);
  EXPECT_EQ(p.strata.size(), 1u);
  EXPECT_EQ(cohomogeneity(group("R3")).cohomogeneity, 0);
  EXPECT_EQ(cohomogeneity(group("SO0(1,2)")).cohomogeneity, 1);
}

TEST(Cohomogeneity, ForcedStrata) {
  const OrbitReport so3 = cohomogeneity_with_singular(group("SO(3)"));
  ASSERT_EQ(so3.strata.size(), 2u);
  EXPECT_EQ(so3.strata[0].dim, 0);
  EXPECT_EQ(so3.strata[0].forced, 1u);
  EXPECT_EQ(so3.strata[1].dim, 2);
  const OrbitReport torus = cohomogeneity_with_singular(group("SO(2)xSO(2)"));
  ASSERT_EQ(torus.strata.front().dim, 1);
  EXPECT_GE(torus.strata.front().forced, 2u);
  EXPECT_EQ(torus.max_dim, 2);
}

TEST(Cohomogeneity, DeterministicAndNeverOverReports) {
  const auto g = group("R+*xSO(2)");
  const OrbitReport a = cohomogeneity(g, 64, 99), b = cohomogeneity(g, 64, 99);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_LE(cohomogeneity(g, 1, seed).max_dim, 2);
}

TEST(Equivalence, Examples) {
  EXPECT_TRUE(orbits_equivalent(group("P"), group("SO(2)|xP")).equivalent);
  EXPECT_TRUE(orbits_equivalent(group("R+*|xP"), group("Na|xP")).equivalent);
  const AnySubalgebra line = EuclidSubalgebra({gen::e(2)});
  EXPECT_FALSE(orbits_equivalent(group("P"), line).equivalent);
  EXPECT_EQ(code_of([] { orbits_equivalent(group("P"), group("SO(4)")); }), ErrorCode::ModelMismatch);
}

TEST(Cloud, SpheresCylindersHalfPlanes) {
  const PointCloud sphere = orbit_cloud(group("SO(3)"), Vec3(1, 0, 0), 100);
  for (const auto& p : sphere.points) EXPECT_NEAR(p.norm(), 1.0, 1e-12);
  const PointCloud cyl = orbit_cloud(group("SO(2)xL"), Vec3(1, 0, 0), 100);
  for (const auto& p : cyl.points) EXPECT_NEAR(std::hypot(p(0), p(1)), 1.0, 1e-12);
  const PointCloud half = orbit_cloud(group("R+*|xL"), Vec3(1, 0, 0), 100);
  for (const auto& p : half.points) {
    EXPECT_NEAR(p(1), 0.0, 1e-12);
    EXPECT_GT(p(0), 0.0);
  }
}

TEST(Cloud, SphereSideStaysOnGreatSphere) {
  const VecX base = SpherePoint::from_unit4({0.36, 0.48, 0.8, 0.0}).n();
  PointCloud c = orbit_cloud(group("SO0(1,3)"), base, 100);
  c.group_label = "SO0(1,3)";
  for (const auto& n : c.points) EXPECT_NEAR(n(4), 0.0, 1e-12);
  EXPECT_LE(invariant_check("SO0(1,3)", c).max_deviation, 1e-8);
}

TEST(Invariant, RegistryAndUnknown) {
  PointCloud c = orbit_cloud(group("SO(3)"), Vec3(0, 2, 0), 50);
  const InvariantReport r = invariant_check("SO(3)", c);
  EXPECT_NEAR(r.reference, 2.0, 1e-15);
  EXPECT_LE(r.max_deviation, 1e-8);
  EXPECT_EQ(code_of([&] { invariant_check("R3", c); }), ErrorCode::UnknownInvariant);
  EXPECT_EQ(code_of([&] { invariant_check("nope", c); }), ErrorCode::UnknownLabel);
}

TEST(Invariant, NaLineConservedQuantity) {
  for (double a : {0.5, 1.0, -2.0}) {
    PointCloud c = orbit_cloud(group("Na|xL", a), Vec3(0.7, 0.2, -0.3), 100);
    c.parameter = a;
    EXPECT_LE(invariant_check("Na|xL", c).max_deviation, 1e-10) << a;
  }
}

TEST(Document, ParseAndSerialize) {
  const std::string text = R"({"model": "euclid", "elements": [
      {"a": 1.0, "rot": [1, 0, 0], "trans": [0, 0, 0]},
      {"a": 0.0, "rot": [0, 0, 0], "trans": [0, 0, 1]}]})";
  const AnySubalgebra g = parse_subalgebra(text);
  EXPECT_EQ(model_of(g), Model::Euclid);
  EXPECT_EQ(as_euclid(g).dim(), 2u);
  const AnySubalgebra again = parse_subalgebra(to_json(g).dump());
  EXPECT_LT(span_distance(as_euclid(g).basis(), as_euclid(again).basis()), 1e-15);

  const AnySubalgebra so13 = catalog_get("SO0(1,3)").generators;
  const AnySubalgebra back = parse_subalgebra(to_json(so13).dump());
  EXPECT_LT(span_distance(as_lorentz(so13).basis(), as_lorentz(back).basis()), 1e-15);
}

TEST(Document, Errors) {
  EXPECT_EQ(code_of([] { parse_subalgebra(std::string("{not json")); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_subalgebra(std::string(R"({"model":"euclid"})")); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_subalgebra(std::string(R"({"model":"hyperbolic","elements":[]})")); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_subalgebra(std::string(R"({"elements":[{"rot":[1,0]}]})")); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_subalgebra(std::string(R"({"model":"lorentz","elements":[{"matrix":[1,2]}]})")); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              parse_subalgebra(std::string(R"({"elements":[{"rot":[1,0,0]},{"rot":[0,1,0]}]})"));
            }),
            ErrorCode::NotASubalgebra);
  EXPECT_EQ(code_of([] { load_subalgebra("/nonexistent/file.json"); }), ErrorCode::Parse);
}

TEST(Document, CsvRoundTrip) {
  PointCloud c = orbit_cloud(group("SO(2)xSO(2)"), SpherePoint::from_unit4({0.5, 0.5, 0.5, 0.5}).n(), 20, 1.0, 7);
  c.group_label = "SO(2)xSO(2)";
  std::stringstream ss;
  write_csv(ss, c);
  const PointCloud back = read_csv(ss);
  EXPECT_EQ(back.model, Model::Lorentz);
  EXPECT_EQ(back.group_label, "SO(2)xSO(2)");
  EXPECT_EQ(back.seed, 7u);
  ASSERT_EQ(back.points.size(), c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) EXPECT_EQ(back.points[i], c.points[i]);
  EXPECT_EQ(back.base_point, c.base_point);
  std::stringstream bad("x,y,z\n1,2,3\n");
  EXPECT_EQ(code_of([&] { read_csv(bad); }), ErrorCode::Parse);
}
