#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confact/bridge.hpp"
#include "confact/catalog.hpp"
#include "confact/classifier.hpp"
#include "confact/document.hpp"
#include "confact/orbit.hpp"
#include "confact/random.hpp"
#include "confact/reduction.hpp"

namespace confact {

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  Tolerances tol;
  std::size_t conjugations = 100;
  std::size_t bridge_pairs = 1000;
  std::size_t cloud_steps = 200;
};

struct VerificationReport {
  Json json;
  bool passed = true;
  std::string first_failure;  ///< section name, empty on success
  bool inconsistent = false;  ///< some failure was an InternalInconsistency
};

namespace verify_detail {

/// The orbit-equivalence classes the harness checks.
inline std::vector<std::vector<std::string>> equivalence_groups() {
  return {
      {"P", "SO(2)|xP"},
      {"R+*|xP", "Na|xP", "(R+*xSO(2))|xP"},
      {"R+*|xR3", "(R+*xSO(3))|xR3", "SO(3)|xR3", "Na|xR3", "R3", "SO(2)|xR3", "(R+*xSO(2))|xR3", "S|xP"},
  };
}

inline std::vector<std::pair<std::string, std::string>> mismatched_pairs() {
  return {{"P", "R3"},         {"P", "SO(3)"},          {"SO(2)xL", "R+*|xL"},   {"SO(3)", "R+*xSO(2)"},
          {"P", "R+*|xP"},     {"Na|xL", "SO(2)xL"},    {"R+*|xL", "Na|xL"},     {"SO(3)", "SO(2)xL"},
          {"R+*xSO(2)", "R+*|xL"}, {"SO(2)|xP", "SO(2)xL"}};
}

/// Expected primary branch and positive-definite dimension of the sphere entries.
inline std::map<std::string, std::pair<ReductionBranch, int>> reduction_expectations() {
  return {
      {"SO0(1,2)", {ReductionBranch::InvariantPositiveDefinite, 2}},
      {"SO0(1,3)", {ReductionBranch::InvariantPositiveDefinite, 1}},
      {"SO0(1,2)xSO(2)", {ReductionBranch::InvariantPositiveDefinite, 2}},
      {"SO0(1,4)", {ReductionBranch::Irreducible, 0}},
      {"SO(3)-block", {ReductionBranch::FixedHyperbolicPoint, -1}},
      {"SO(2)xSO(2)", {ReductionBranch::FixedHyperbolicPoint, -1}},
      {"SO(4)", {ReductionBranch::FixedHyperbolicPoint, -1}},
  };
}

/// Labels with a registered conserved quantity and the base points their clouds start from.
inline std::vector<std::pair<std::string, VecX>> invariant_cases() {
  const auto sphere = [](double a, double b, double c, double d) {
    return VecX(SpherePoint::from_unit4(Eigen::Vector4d(a, b, c, d)).n());
  };
  const VecX generic = Vec3(0.8, -0.5, 0.6);
  return {
      {"SO(3)", Vec3(1.2, -0.4, 1.4)},
      {"SO(2)xL", Vec3(1.0, 0.0, 0.0)},
      {"P", generic},
      {"SO(2)|xP", generic},
      {"R+*|xL", Vec3(1.0, 0.0, 0.0)},
      {"Na|xL", generic},
      {"R+*xSO(2)", Vec3(0.0, 1.0, 0.0)},
      {"R+*|xP", generic},
      {"Na|xP", Vec3(0.3, 0.9, 0.0)},
      {"(R+*xSO(2))|xP", generic},
      {"SO(2)xSO(2)", sphere(0.5, 0.5, 0.5, 0.5)},
      {"SO(3)-block", sphere(0.6, 0.0, 0.48, 0.64)},
      {"SO0(1,2)", sphere(0.2, 0.4, 0.4, 0.8)},
      {"SO0(1,3)", sphere(0.36, 0.48, 0.8, 0.0)},
  };
}

inline std::optional<double> unit_parameter(const std::string& label) {
  return is_n_family(canonical_label(label)) ? std::optional<double>(1.0) : std::nullopt;
}

inline AnySubalgebra generators_of(const std::string& label) {
  return catalog_get(label, unit_parameter(label)).generators;
}

class Section {
 public:
  Section(std::string name, std::string title) : name_(std::move(name)) {
    json_["section"] = name_;
    json_["title"] = std::move(title);
    json_["entries"] = Json::array();
  }

  void add(Json entry, bool ok) {
    entry["pass"] = ok;
    passed_ = passed_ && ok;
    json_["entries"].push_back(std::move(entry));
  }

  void fail_with(Json entry, const Error& e) {
    entry["error"] = std::string(to_string(e.code()));
    entry["message"] = e.what();
    if (e.code() == ErrorCode::InternalInconsistency) inconsistent_ = true;
    add(std::move(entry), false);
  }

  void finish(VerificationReport& report) {
    json_["pass"] = passed_;
    report.json["sections"].push_back(json_);
    if (!passed_ && report.passed) report.first_failure = name_;
    report.passed = report.passed && passed_;
    report.inconsistent = report.inconsistent || inconsistent_;
  }

 private:
  std::string name_;
  Json json_;
  bool passed_ = true;
  bool inconsistent_ = false;
};

}  // namespace verify_detail

/**
 * @brief Runs every table check and collects a deterministic JSON report.
 *
 * Sections, in order: (a) cohomogeneity against the catalog claims,
 * (b) orbit-equivalence groupings, (c) classification round-trips,
 * (d) bridge equivariance and Euclid/sphere cohomogeneity agreement,
 * (e) reduction branches of the sphere entries, (f) conserved quantities.
 */
inline VerificationReport verify_tables(const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  VerificationReport report;
  report.json["seed"] = opt.seed;
  report.json["samples"] = opt.samples;
  report.json["tolerances"] = {{"eps", opt.tol.eps}, {"rank_tol", opt.tol.rank}};
  report.json["sections"] = Json::array();

  {
    Section s("a", "cohomogeneity of catalog entries");
    for (const auto& e : catalog_list()) {
      Json entry = {{"label", e.label}, {"claimed_cohomogeneity", e.claimed_cohomogeneity}};
      try {
        const OrbitReport r = cohomogeneity_with_singular(e.generators, opt.samples, opt.seed, opt.tol);
        entry["computed_cohomogeneity"] = r.cohomogeneity;
        entry["strata"] = to_json(r)["strata"];
        s.add(entry, r.cohomogeneity == e.claimed_cohomogeneity);
      } catch (const Error& err) {
        s.fail_with(entry, err);
      }
    }
    s.finish(report);
  }

  {
    Section s("b", "orbit-equivalence groupings");
    auto check = [&](const std::string& l1, const std::string& l2, bool expected) {
      Json entry = {{"first", l1}, {"second", l2}, {"expected", expected}};
      try {
        const EquivalenceReport r =
            orbits_equivalent(generators_of(l1), generators_of(l2), opt.samples, opt.seed, opt.tol);
        entry["equivalent"] = r.equivalent;
        entry["max_distance"] = r.max_distance;
        s.add(entry, r.equivalent == expected);
      } catch (const Error& err) {
        s.fail_with(entry, err);
      }
    };
    for (const auto& group : equivalence_groups())
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) check(group[i], group[j], true);
    for (const auto& [l1, l2] : mismatched_pairs()) check(l1, l2, false);
    s.finish(report);
  }

  {
    Section s("c", "classification round-trips");
    rnd::Rng rng(opt.seed);
    for (const auto& label : euclid_labels()) {
      const auto a = unit_parameter(label);
      const std::vector<ConfAlgElement> basis = as_euclid(catalog_get(label, a).generators).basis();
      Json entry = {{"label", label}, {"trials", opt.conjugations}};
      std::size_t recovered = 0;
      double worst_residual = 0.0, worst_a = 0.0;
      std::string first_error;
      for (std::size_t t = 0; t < opt.conjugations; ++t) {
        const ConfElement h = rnd::similarity(rng);
        std::vector<ConfAlgElement> conj;
        for (const auto& b : basis) conj.push_back(adjoint(h, b));
        try {
          const ClassificationResult r = classify(conj, opt.tol);
          worst_residual = std::max(worst_residual, r.residual);
          const double da = a ? std::abs(r.parameter.value_or(0.0) - *a) : 0.0;
          worst_a = std::max(worst_a, da);
          if (r.label == label && da <= 1e-6 && r.residual <= opt.tol.rank) ++recovered;
        } catch (const Error& err) {
          if (first_error.empty()) first_error = std::string(to_string(err.code())) + ": " + err.what();
          if (err.code() == ErrorCode::InternalInconsistency) entry["internal_inconsistency"] = true;
        }
      }
      entry["recovered"] = recovered;
      entry["max_residual"] = worst_residual;
      if (a) entry["max_parameter_error"] = worst_a;
      if (!first_error.empty()) entry["first_error"] = first_error;
      const bool ok = recovered == opt.conjugations;
      if (!ok && entry.contains("internal_inconsistency")) {
        s.fail_with(entry, Error(ErrorCode::InternalInconsistency, first_error));
      } else {
        s.add(entry, ok);
      }
    }
    s.finish(report);
  }

  {
    Section s("d", "bridge equivariance and sphere cohomogeneity");
    rnd::Rng rng(opt.seed + 1);
    double worst = 0.0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opt.bridge_pairs; ++i) {
      const ConfElement g = rnd::proper_similarity(rng);
      const EuclidPoint x = 2.0 * rnd::gaussian3(rng);
      try {
        const Vec5 lhs = embed_point(act(g, x), opt.tol.eps).n();
        const Vec5 rhs = act_sphere(embed_conf(g), embed_point(x, opt.tol.eps), 1e-6).n();
        worst = std::max(worst, (lhs - rhs).norm());
      } catch (const Error&) {
        ++failures;
      }
    }
    s.add({{"check", "equivariance"}, {"pairs", opt.bridge_pairs}, {"max_deviation", worst}, {"errors", failures}},
          failures == 0 && worst <= 1e-8);

    std::vector<VecX> forced;
    for (const auto& p : euclid_singular_points()) forced.emplace_back(embed_point(Vec3(p)).n());
    forced.emplace_back(infinity_point().n());
    for (const auto& label : euclid_labels()) {
      Json entry = {{"label", label}};
      try {
        const AnySubalgebra g = generators_of(label);
        const OrbitReport flat = cohomogeneity(g, opt.samples, opt.seed, opt.tol, euclid_singular_points());
        const AnySubalgebra lifted = LorentzSubalgebra(embed_alg(as_euclid(g).basis()), opt.tol);
        const OrbitReport sphere = cohomogeneity(lifted, opt.samples, opt.seed, opt.tol, forced);
        entry["euclid_cohomogeneity"] = flat.cohomogeneity;
        entry["sphere_cohomogeneity"] = sphere.cohomogeneity;
        s.add(entry, flat.cohomogeneity == sphere.cohomogeneity);
      } catch (const Error& err) {
        s.fail_with(entry, err);
      }
    }
    s.finish(report);
  }

  {
    Section s("e", "reduction branches of sphere entries");
    for (const auto& [label, expected] : reduction_expectations()) {
      Json entry = {{"label", label}, {"expected", std::string(to_string(expected.first))}};
      try {
        const ReductionReport r = reduction_scan(as_lorentz(catalog_get(label).generators), opt.tol);
        entry["primary"] = std::string(to_string(r.primary));
        entry["positive_definite_dim"] = r.positive_definite_dim;
        bool ok = r.primary == expected.first;
        if (expected.second >= 0 && expected.first == ReductionBranch::InvariantPositiveDefinite)
          ok = ok && r.positive_definite_dim == expected.second;
        s.add(entry, ok);
      } catch (const Error& err) {
        s.fail_with(entry, err);
      }
    }
    s.finish(report);
  }

  {
    Section s("f", "conserved quantities on orbit clouds");
    for (const auto& [label, base] : invariant_cases()) {
      Json entry = {{"label", label}};
      try {
        const auto a = unit_parameter(label);
        PointCloud cloud = orbit_cloud(catalog_get(label, a).generators, base, opt.cloud_steps, 1.0, opt.seed, opt.tol);
        cloud.group_label = label;
        cloud.parameter = a;
        const InvariantReport r = invariant_check(label, cloud);
        entry["quantity"] = r.quantity;
        entry["max_deviation"] = r.max_deviation;
        s.add(entry, r.max_deviation <= 1e-8);
      } catch (const Error& err) {
        s.fail_with(entry, err);
      }
    }
    s.finish(report);
  }

  report.json["summary"] = {{"pass", report.passed},
                            {"first_failing_section", report.first_failure.empty() ? Json(nullptr)
                                                                                   : Json(report.first_failure)}};
  return report;
}

}  // namespace confact
