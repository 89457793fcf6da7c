#include <gtest/gtest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "confact/euclid.hpp"
#include "confact/expm.hpp"
#include "confact/random.hpp"

using namespace confact;

namespace {

Mat4 eigen_expm(const Mat4& m) { return m.exp(); }

double rel_err(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

Mat3 rot_t(double t) {
  Mat3 r;
  r << std::cos(t), std::sin(t), 0, -std::sin(t), std::cos(t), 0, 0, 0, 1;
  return r;
}

}  // namespace

TEST(Expm, MatchesEigenOnRandomMatrices) {
  rnd::Rng rng(1);
  for (double scale : {1e-3, 0.5, 3.0, 20.0}) {
    for (int k = 0; k < 50; ++k) {
      Mat4 m;
      for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = scale * rnd::normal(rng);
      EXPECT_LT(rel_err(expm(m), eigen_expm(m)), 1e-11) << "scale " << scale;
    }
  }
}

TEST(Expm, ZeroAndNilpotent) {
  EXPECT_LT((expm(Mat4(Mat4::Zero())) - Mat4::Identity()).norm(), 1e-15);
  Mat4 n = Mat4::Zero();
  n(0, 1) = 2.0;
  n(1, 2) = 3.0;
  Mat4 expected = Mat4::Identity() + n + n * n / 2.0;
  EXPECT_LT((expm(n) - expected).norm(), 1e-14);
}

TEST(So3, BasisMatchesDisplayedMatrices) {
  Mat3 x, y, z;
  x << 0, 1, 0, -1, 0, 0, 0, 0, 0;
  y << 0, 0, 1, 0, 0, 0, -1, 0, 0;
  z << 0, 0, 0, 0, 0, 1, 0, -1, 0;
  EXPECT_EQ(so3::X(), x);
  EXPECT_EQ(so3::Y(), y);
  EXPECT_EQ(so3::Z(), z);
}

TEST(So3, Brackets) {
  auto br = [](const Mat3& a, const Mat3& b) { return Mat3(a * b - b * a); };
  EXPECT_EQ(br(so3::X(), so3::Y()), Mat3(-so3::Z()));
  EXPECT_EQ(br(so3::X(), so3::Z()), so3::Y());
  EXPECT_EQ(br(so3::Y(), so3::Z()), Mat3(-so3::X()));
}

TEST(So3, ActionOnBasisVectors) {
  const Vec3 e1 = Vec3::UnitX(), e2 = Vec3::UnitY(), e3 = Vec3::UnitZ();
  EXPECT_EQ(so3::X() * e1, Vec3(-e2));
  EXPECT_EQ(so3::Z() * e3, e2);
  EXPECT_EQ(so3::X() * e2, e1);
  EXPECT_EQ(so3::Y() * e3, e1);
  EXPECT_EQ(so3::Y() * e1, Vec3(-e3));
  EXPECT_EQ(so3::Z() * e2, Vec3(-e3));
  EXPECT_EQ(so3::X() * e3, Vec3::Zero());
  EXPECT_EQ(so3::Y() * e2, Vec3::Zero());
  EXPECT_EQ(so3::Z() * e1, Vec3::Zero());
}

TEST(So3, CoordsAndHatRoundTrip) {
  const Vec3 c(0.3, -1.2, 2.5);
  EXPECT_EQ(so3::coords(so3::from_coords(c)), c);
  const Vec3 w(1.0, -2.0, 0.5), v(0.2, 0.7, -1.1);
  EXPECT_LT((so3::hat(w) * v - w.cross(v)).norm(), 1e-15);
  EXPECT_EQ(so3::axis(so3::hat(w)), w);
}

TEST(ConfElement, RejectsInvalidInput) {
  EXPECT_THROW(ConfElement(0.0, Mat3::Identity(), Vec3::Zero()), Error);
  Mat3 shear = Mat3::Identity();
  shear(0, 1) = 0.1;
  try {
    ConfElement(1.0, shear, Vec3::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
  }
}

TEST(ConfElement, ComposeMatchesMatrixProduct) {
  rnd::Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const ConfElement g = rnd::similarity(rng), h = rnd::similarity(rng);
    EXPECT_LT(rel_err((g * h).matrix(), g.matrix() * h.matrix()), 1e-14);
    EXPECT_LT(rel_err((g * inverse(g)).matrix(), Mat4::Identity()), 1e-12);
    const Vec3 p = rnd::gaussian3(rng);
    Eigen::Vector4d hp;
    hp << p, 1.0;
    EXPECT_LT((act(g, p) - (g.matrix() * hp).head<3>()).norm(), 1e-12);
  }
}

TEST(ConfElement, GroupLawFormula) {
  const ConfElement g(2.0, rot_t(0.4), Vec3(1, 2, 3));
  const ConfElement h(-0.5, rot_t(-1.1), Vec3(0, 1, -1));
  const ConfElement gh = g * h;
  EXPECT_DOUBLE_EQ(gh.alpha(), -1.0);
  EXPECT_LT((gh.A() - rot_t(0.4) * rot_t(-1.1)).norm(), 1e-15);
  EXPECT_LT((gh.v() - (2.0 * rot_t(0.4) * Vec3(0, 1, -1) + Vec3(1, 2, 3))).norm(), 1e-14);
}

TEST(ConfAlg, BracketMatchesMatrixCommutator) {
  rnd::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng);
    const Mat4 expected = x.matrix() * y.matrix() - y.matrix() * x.matrix();
    EXPECT_LT((bracket(x, y).matrix() - expected).norm(), 1e-13);
  }
}

TEST(ConfAlg, BracketFormula) {
  // [λ, w] = w, [X, e₁] = X(e₁) = −e₂.
  EXPECT_EQ(bracket(gen::lambda(), gen::e(0)).coords(), gen::e(0).coords());
  EXPECT_EQ(bracket(gen::X(), gen::e(0)).coords(), gen::translation(Vec3(0, -1, 0)).coords());
  EXPECT_EQ(bracket(gen::X(), gen::Y()).coords(), (gen::Z() * -1.0).coords());
}

TEST(ConfAlg, AdjointMatchesConjugation) {
  rnd::Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const ConfElement g = rnd::similarity(rng);
    const ConfAlgElement x = rnd::conf_alg(rng);
    const Mat4 expected = g.matrix() * x.matrix() * g.matrix().inverse();
    EXPECT_LT(rel_err(adjoint(g, x).matrix(), expected), 1e-12);
  }
}

TEST(ConfAlg, RejectsNonSkewRotationPart) {
  Mat3 v = Mat3::Identity();
  EXPECT_THROW(ConfAlgElement(0.0, v, Vec3::Zero()), Error);
}

TEST(Exp, MatchesEigenExponential) {
  rnd::Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng);
    const double t = rnd::uniform(rng, -2.0, 2.0);
    EXPECT_LT(rel_err(exp(x, t).matrix(), eigen_expm(Mat4(t * x.matrix()))), 1e-11);
  }
}

TEST(Exp, ClosedFormNa) {
  for (double a : {1.0, -2.0, 0.5}) {
    for (double t : {-5.0, -1.3, 0.0, 0.7, 5.0}) {
      const ConfElement g = exp(gen::screw_homothety(a), t);
      EXPECT_NEAR(g.alpha(), std::exp(a * t), 1e-9);
      EXPECT_LT((g.A() - rot_t(t)).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_LT(g.v().cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Exp, ClosedFormScrew) {
  for (double t : {-5.0, -0.2, 0.0, 2.5, 5.0}) {
    const ConfElement g = exp(gen::X() + gen::e(2), t);
    EXPECT_NEAR(g.alpha(), 1.0, 1e-12);
    EXPECT_LT((g.A() - rot_t(t)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((g.v() - Vec3(0, 0, t)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(GeneratorField, MatchesFiniteDifference) {
  rnd::Rng rng(6);
  for (int k = 0; k < 100; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng);
    const Vec3 p = rnd::gaussian3(rng);
    const double h = 1e-5;
    const Vec3 fd = (act(exp(x, h), p) - act(exp(x, -h), p)) / (2 * h);
    EXPECT_LT((generator_field(x, p) - fd).norm(), 1e-7);
  }
}

TEST(GeneratorField, Anchors) {
  const Vec3 p(0.3, -1.7, 2.2);
  EXPECT_EQ(generator_field(gen::X() + gen::e(2), p), Vec3(p.y(), -p.x(), 1.0));
  const double a = 1.5;
  EXPECT_LT((generator_field(gen::screw_homothety(a), p) -
             Vec3(a * p.x() + p.y(), -p.x() + a * p.y(), a * p.z())).norm(),
            1e-15);
}

TEST(Projections, AreLieMorphisms) {
  rnd::Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const ConfAlgElement x = rnd::conf_alg(rng), y = rnd::conf_alg(rng);
    EXPECT_LT((project_l(bracket(x, y)).coords() - bracket(project_l(x), project_l(y)).coords()).norm(), 1e-13);
    const Mat3 vx = project_li(x), vy = project_li(y);
    EXPECT_LT((project_li(bracket(x, y)) - (vx * vy - vy * vx)).norm(), 1e-13);
    EXPECT_NEAR(project_h(bracket(x, y)), 0.0, 1e-15);
  }
}
