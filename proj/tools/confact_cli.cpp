// confact: command-line front end for the similarity/Lorentz subgroup toolkit.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "confact/confact.hpp"

namespace {

using namespace confact;

enum Exit : int { Ok = 0, IoOrParse = 1, NotSubalgebra = 2, TooSmall = 3, Inconsistent = 4, UnknownName = 5 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotASubalgebra: return NotSubalgebra;
    case ErrorCode::DimensionTooSmall: return TooSmall;
    case ErrorCode::InternalInconsistency: return Inconsistent;
    case ErrorCode::UnknownLabel: return UnknownName;
    default: return IoOrParse;
  }
}

struct Common {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  double eps = Tolerances{}.eps;
  double rank_tol = Tolerances{}.rank;
  std::string out;
  std::string format = "text";
  std::optional<double> a;

  Tolerances tol() const { return {eps, rank_tol}; }
};

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(ErrorCode::Parse, "cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

bool looks_like_file(const std::string& s) {
  return s.ends_with(".json") || std::filesystem::is_regular_file(s);
}

/// A catalog label or a SubalgebraDocument path.
AnySubalgebra resolve(const std::string& what, const Common& c, std::string* label_out = nullptr) {
  if (looks_like_file(what)) {
    if (label_out) *label_out = what;
    return load_subalgebra(what, c.tol());
  }
  const std::string label = canonical_label(what);
  if (label_out) *label_out = label;
  std::optional<double> a = c.a;
  if (is_n_family(label) && !a) a = 1.0;
  return catalog_get(label, is_n_family(label) ? a : std::nullopt).generators;
}

std::string vec_text(const VecX& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ')';
  return os.str();
}

int cmd_catalog(const Common& c, const std::string& model, std::optional<int> cohom) {
  CatalogFilter filter;
  if (model == "euclid") filter.model = Model::Euclid;
  else if (model == "lorentz") filter.model = Model::Lorentz;
  else if (!model.empty()) throw Error(ErrorCode::Parse, "--model must be euclid or lorentz");
  filter.cohomogeneity = cohom;
  const auto entries = catalog_list(filter);
  Sink sink(c.out);
  auto& os = sink.stream();
  if (c.format == "json") {
    Json rows = Json::array();
    for (const auto& e : entries)
      rows.push_back({{"label", e.label}, {"display", e.display}, {"model", std::string(to_string(e.model))},
                      {"dim", e.dim()}, {"claimed_cohomogeneity", e.claimed_cohomogeneity}, {"compact", e.compact},
                      {"source", e.source}, {"orbits", e.orbit_description}});
    os << rows.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "label,model,dim,claimed_cohomogeneity,compact,source\n";
    for (const auto& e : entries)
      os << e.label << ',' << to_string(e.model) << ',' << e.dim() << ',' << e.claimed_cohomogeneity << ','
         << (e.compact ? "true" : "false") << ',' << e.source << '\n';
  } else {
    os << std::left << std::setw(18) << "label" << std::setw(9) << "model" << std::setw(5) << "dim" << std::setw(7)
       << "cohom" << std::setw(9) << "compact" << "source\n";
    for (const auto& e : entries)
      os << std::setw(18) << e.label << std::setw(9) << to_string(e.model) << std::setw(5) << e.dim() << std::setw(7)
         << e.claimed_cohomogeneity << std::setw(9) << (e.compact ? "yes" : "no") << e.source << '\n';
  }
  return Ok;
}

int cmd_classify(const Common& c, const std::string& path) {
  const AnySubalgebra g = load_subalgebra(path, c.tol());
  const ClassificationResult r = classify(g, c.tol());
  Sink sink(c.out);
  auto& os = sink.stream();
  if (c.format == "json") {
    os << to_json(r).dump(2) << '\n';
    return Ok;
  }
  os << "label: " << r.label;
  if (r.parameter) os << ", a = " << *r.parameter;
  os << '\n';
  os << "conjugator: alpha = " << r.conjugator.alpha() << ", v = " << vec_text(r.conjugator.v()) << "\n  A =\n"
     << r.conjugator.A() << '\n';
  os << "residual: " << r.residual << '\n';
  return Ok;
}

int cmd_cohomogeneity(const Common& c, const std::string& what) {
  std::string label;
  const AnySubalgebra g = resolve(what, c, &label);
  const OrbitReport r = cohomogeneity_with_singular(g, c.samples, c.seed, c.tol());
  Sink sink(c.out);
  auto& os = sink.stream();
  if (c.format == "json") {
    Json j = to_json(r);
    j["label"] = label;
    os << j.dump(2) << '\n';
    return Ok;
  }
  os << label << '\n' << "cohomogeneity: " << r.cohomogeneity << " (max orbit dim " << r.max_dim << ")\n";
  for (const auto& s : r.strata)
    os << "  stratum dim " << s.dim << ": " << s.count << " points (" << s.forced << " forced), witness "
       << vec_text(s.witness) << '\n';
  return Ok;
}

VecX parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad coordinate \"" + tok + "\" in --point");
    }
  }
  return Eigen::Map<VecX>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

int cmd_orbit(const Common& c, const std::string& what, const std::string& point, std::size_t steps, double t_max) {
  std::string label;
  const AnySubalgebra g = resolve(what, c, &label);
  VecX p = parse_point(point);
  if (model_of(g) == Model::Lorentz && p.size() == 4) p = SpherePoint::from_unit4(Eigen::Vector4d(p)).n();
  PointCloud cloud = orbit_cloud(g, p, steps, t_max, c.seed, c.tol());
  cloud.group_label = label;
  if (is_n_family(label)) cloud.parameter = c.a.value_or(1.0);
  Sink sink(c.out);
  auto& os = sink.stream();
  if (c.format == "json") os << to_json(cloud).dump(2) << '\n';
  else write_csv(os, cloud);
  if (!c.out.empty()) {
    std::cout << "wrote " << cloud.points.size() << " points to " << c.out << '\n';
    try {
      const InvariantReport r = invariant_check(label, cloud);
      std::cout << r.quantity << " = " << r.reference << ", max deviation " << r.max_deviation << '\n';
    } catch (const Error&) {
    }
  }
  return Ok;
}

int cmd_verify(const Common& c) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.samples = c.samples;
  opt.tol = c.tol();
  const VerificationReport r = verify_tables(opt);
  const std::string text = r.json.dump(2) + "\n";
  if (!c.out.empty()) {
    Sink sink(c.out);
    sink.stream() << text;
  } else if (c.format == "json") {
    std::cout << text;
  }
  for (const auto& s : r.json["sections"])
    std::cout << "section " << s["section"].get<std::string>() << " (" << s["title"].get<std::string>()
              << "): " << (s["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
  if (r.passed) {
    std::cout << "overall: PASS\n";
    return Ok;
  }
  std::cout << "overall: FAIL (first failing section " << r.first_failure << ")\n";
  return Inconsistent;
}

int cmd_reduce(const Common& c, const std::string& what) {
  std::string label;
  const AnySubalgebra g = resolve(what, c, &label);
  const ReductionReport r = reduction_scan(as_lorentz(g), c.tol());
  Sink sink(c.out);
  auto& os = sink.stream();
  if (c.format == "json") {
    Json j = to_json(r);
    j["label"] = label;
    os << j.dump(2) << '\n';
    return Ok;
  }
  os << label << '\n' << "primary: " << to_string(r.primary) << '\n' << "branches:";
  for (auto b : r.branches) os << ' ' << to_string(b);
  os << '\n' << "positive-definite dim: " << r.positive_definite_dim << '\n';
  if (r.fixed_hyperbolic_point) os << "fixed point of H^4: " << vec_text(*r.fixed_hyperbolic_point) << '\n';
  if (r.fixed_sphere_point) os << "fixed point of S^3: " << vec_text(*r.fixed_sphere_point) << '\n';
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected subgroups of the conformal group of E^3 and S^3"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--seed", c.seed, "sampler seed")->capture_default_str();
  app.add_option("--samples", c.samples, "random sample points")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--eps", c.eps, "geometric tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--rank-tol", c.rank_tol, "rank tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "output file");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--a", c.a, "parameter of the N_a families");

  std::string model, target, point;
  std::optional<int> cohom;
  std::size_t steps = 200;
  double t_max = 1.0;

  auto* catalog = app.add_subcommand("catalog", "list the catalog");
  catalog->add_option("--model", model, "euclid or lorentz");
  catalog->add_option("--cohomogeneity", cohom, "only entries with this claimed cohomogeneity");

  auto* classify_cmd = app.add_subcommand("classify", "classify a subalgebra document");
  classify_cmd->add_option("path", target, "SubalgebraDocument (JSON)")->required();

  auto* cohom_cmd = app.add_subcommand("cohomogeneity", "sample orbit dimensions");
  cohom_cmd->add_option("target", target, "catalog label or document path")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "export an orbit point cloud");
  orbit_cmd->add_option("target", target, "catalog label or document path")->required();
  orbit_cmd->add_option("--point", point, "base point x,y,z (or n1..n5 / a 4-vector of S^3)")->required();
  orbit_cmd->add_option("--steps", steps, "number of points")->capture_default_str();
  orbit_cmd->add_option("--t-max", t_max, "largest flow time")->capture_default_str();

  app.add_subcommand("verify-tables", "reproduce all tables");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduction scan of an so(1,4) subalgebra");
  reduce_cmd->add_option("target", target, "catalog label or document path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return IoOrParse;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(c, model, cohom);
    if (classify_cmd->parsed()) return cmd_classify(c, target);
    if (cohom_cmd->parsed()) return cmd_cohomogeneity(c, target);
    if (orbit_cmd->parsed()) return cmd_orbit(c, target, point, steps, t_max);
    if (app.got_subcommand("verify-tables")) return cmd_verify(c);
    if (reduce_cmd->parsed()) return cmd_reduce(c, target);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return IoOrParse;
  }
  return Ok;
}
