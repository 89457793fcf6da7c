#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "confact/classifier.hpp"
#include "confact/orbit.hpp"
#include "confact/reduction.hpp"
#include "confact/subalgebra.hpp"

namespace confact {

using Json = nlohmann::ordered_json;

namespace doc_detail {

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

inline Vec3 vec3(const Json& j, const char* key) {
  if (!j.contains(key)) return Vec3::Zero();
  const Json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) parse_error(std::string("\"") + key + "\" must be an array of 3 numbers");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_number()) parse_error(std::string("\"") + key + "\" has a non-number");
    out(i) = v[static_cast<std::size_t>(i)].get<double>();
  }
  return out;
}

inline Json array(const Eigen::Ref<const VecX>& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline Json matrix(const Eigen::Ref<const MatX>& m) {
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(array(m.row(r).transpose()));
  return a;
}

}  // namespace doc_detail

/**
 * @brief Parses a SubalgebraDocument.
 *
 * {"model": "euclid", "elements": [{"a": 1, "rot": [cX, cY, cZ], "trans": [w1, w2, w3]}, …]}
 * {"model": "lorentz", "elements": [{"matrix": [25 numbers, row-major]}, …]}
 *
 * Malformed input raises Parse; a span that is not bracket-closed raises
 * NotASubalgebra with the residual in the message.
 */
inline AnySubalgebra parse_subalgebra(const Json& j, Tolerances tol = {}) {
  using doc_detail::parse_error;
  if (!j.is_object()) parse_error("document must be an object");
  if (!j.contains("elements") || !j.at("elements").is_array()) parse_error("missing \"elements\" array");
  const std::string model = j.value("model", std::string("euclid"));
  const Json& elements = j.at("elements");
  if (model == "euclid") {
    std::vector<ConfAlgElement> basis;
    for (const Json& e : elements) {
      if (!e.is_object()) parse_error("element must be an object");
      const Json a = e.value("a", Json(0.0));
      if (!a.is_number()) parse_error("\"a\" must be a number");
      EuclidCoords c;
      c << a.get<double>(), doc_detail::vec3(e, "rot"), doc_detail::vec3(e, "trans");
      basis.push_back(ConfAlgElement::from_coords(c));
    }
    return EuclidSubalgebra(basis, tol);
  }
  if (model == "lorentz") {
    std::vector<LorentzAlgElement> basis;
    for (const Json& e : elements) {
      if (!e.is_object() || !e.contains("matrix")) parse_error("element needs \"matrix\"");
      const Json& m = e.at("matrix");
      if (!m.is_array() || m.size() != 25) parse_error("\"matrix\" must hold 25 numbers");
      Mat5 mat;
      for (int i = 0; i < 25; ++i) {
        if (!m[static_cast<std::size_t>(i)].is_number()) parse_error("\"matrix\" has a non-number");
        mat(i / 5, i % 5) = m[static_cast<std::size_t>(i)].get<double>();
      }
      try {
        basis.emplace_back(mat, tol.eps);
      } catch (const Error& err) {
        parse_error(std::string("matrix is not in so(1,4): ") + err.what());
      }
    }
    return LorentzSubalgebra(basis, tol);
  }
  parse_error("unknown model \"" + model + "\"");
}

inline AnySubalgebra parse_subalgebra(const std::string& text, Tolerances tol = {}) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    doc_detail::parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_subalgebra(j, tol);
}

inline AnySubalgebra load_subalgebra(const std::string& path, Tolerances tol = {}) {
  std::ifstream in(path);
  if (!in) doc_detail::parse_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_subalgebra(ss.str(), tol);
}

inline Json to_json(const AnySubalgebra& g) {
  Json j;
  j["model"] = std::string(to_string(model_of(g)));
  Json elements = Json::array();
  if (model_of(g) == Model::Euclid) {
    for (const auto& x : as_euclid(g).basis()) {
      const EuclidCoords c = x.coords();
      elements.push_back({{"a", c(0)}, {"rot", doc_detail::array(c.segment<3>(1))}, {"trans", doc_detail::array(c.tail<3>())}});
    }
  } else {
    for (const auto& x : as_lorentz(g).basis()) {
      Json m = Json::array();
      for (int i = 0; i < 25; ++i) m.push_back(x.matrix()(i / 5, i % 5));
      elements.push_back({{"matrix", m}});
    }
  }
  j["elements"] = elements;
  return j;
}

inline Json to_json(const ClassificationResult& r) {
  Json j;
  j["label"] = r.label;
  j["parameter"] = r.parameter ? Json(*r.parameter) : Json(nullptr);
  j["conjugator"] = {{"alpha", r.conjugator.alpha()},
                     {"A", doc_detail::matrix(r.conjugator.A())},
                     {"v", doc_detail::array(r.conjugator.v())}};
  j["residual"] = r.residual;
  return j;
}

inline Json to_json(const OrbitReport& r) {
  Json j;
  j["model"] = std::string(to_string(r.model));
  j["max_dim"] = r.max_dim;
  j["cohomogeneity"] = r.cohomogeneity;
  j["samples"] = r.samples;
  j["seed"] = r.sampler_seed;
  Json strata = Json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"dim", s.dim}, {"count", s.count}, {"forced", s.forced}, {"witness", doc_detail::array(s.witness)}});
  j["strata"] = strata;
  return j;
}

inline Json to_json(const EquivalenceReport& r) {
  Json j;
  j["equivalent"] = r.equivalent;
  j["max_distance"] = r.max_distance;
  j["samples"] = r.samples;
  if (r.first_mismatch) j["first_mismatch"] = doc_detail::array(*r.first_mismatch);
  return j;
}

inline Json to_json(const InvariantReport& r) {
  return {{"label", r.label}, {"quantity", r.quantity}, {"reference", r.reference},
          {"max_deviation", r.max_deviation}, {"points", r.points}};
}

inline Json to_json(const ReductionReport& r) {
  Json j;
  j["primary"] = std::string(to_string(r.primary));
  Json branches = Json::array();
  for (auto b : r.branches) branches.push_back(std::string(to_string(b)));
  j["branches"] = branches;
  j["kernel_dim"] = r.kernel.cols();
  j["positive_definite_dim"] = r.positive_definite_dim;
  j["fixed_sphere_point"] = r.fixed_sphere_point ? doc_detail::array(*r.fixed_sphere_point) : Json(nullptr);
  j["fixed_hyperbolic_point"] = r.fixed_hyperbolic_point ? doc_detail::array(*r.fixed_hyperbolic_point) : Json(nullptr);
  Json subspaces = Json::array();
  for (const auto& s : r.subspaces)
    subspaces.push_back({{"dim", s.basis.cols()}, {"type", std::string(to_string(s.type))}, {"in_kernel", s.in_kernel}});
  j["subspaces"] = subspaces;
  return j;
}

inline Json to_json(const PointCloud& c) {
  Json j;
  j["model"] = std::string(to_string(c.model));
  j["label"] = c.group_label;
  if (c.parameter) j["parameter"] = *c.parameter;
  j["base_point"] = doc_detail::array(c.base_point);
  j["seed"] = c.seed;
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(doc_detail::array(p));
  j["points"] = pts;
  return j;
}

/**
 * CSV layout: one comment line `# label=…,base=…,seed=…`, a column header
 * (x,y,z or n1..n5), then one point per row.
 */
inline void write_csv(std::ostream& os, const PointCloud& c) {
  os << std::setprecision(17);
  os << "# label=" << c.group_label;
  if (c.parameter) os << ",a=" << *c.parameter;
  os << ",base=";
  for (Eigen::Index i = 0; i < c.base_point.size(); ++i) os << (i ? ";" : "") << c.base_point(i);
  os << ",seed=" << c.seed << '\n';
  os << (c.model == Model::Euclid ? "x,y,z" : "n1,n2,n3,n4,n5") << '\n';
  for (const auto& p : c.points) {
    for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i);
    os << '\n';
  }
}

/// Reads back what write_csv produced (label, base point, seed and points).
inline PointCloud read_csv(std::istream& is) {
  using doc_detail::parse_error;
  PointCloud c;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) parse_error("missing metadata line");
  std::stringstream meta(line.substr(2));
  std::string field;
  while (std::getline(meta, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) parse_error("bad metadata field \"" + field + "\"");
    const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    try {
      if (key == "label") c.group_label = val;
      else if (key == "a") c.parameter = std::stod(val);
      else if (key == "seed") c.seed = std::stoull(val);
      else if (key == "base") {
        std::vector<double> xs;
        std::stringstream bs(val);
        std::string x;
        while (std::getline(bs, x, ';')) xs.push_back(std::stod(x));
        c.base_point = Eigen::Map<VecX>(xs.data(), static_cast<Eigen::Index>(xs.size()));
      }
    } catch (const std::exception&) {
      parse_error("bad metadata value in \"" + field + "\"");
    }
  }
  if (!std::getline(is, line)) parse_error("missing column header");
  if (line == "x,y,z") c.model = Model::Euclid;
  else if (line == "n1,n2,n3,n4,n5") c.model = Model::Lorentz;
  else parse_error("unknown column header \"" + line + "\"");
  const Eigen::Index width = c.model == Model::Euclid ? 3 : 5;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string x;
    VecX p(width);
    Eigen::Index i = 0;
    try {
      while (std::getline(row, x, ',')) {
        if (i >= width) parse_error("too many columns");
        p(i++) = std::stod(x);
      }
    } catch (const std::invalid_argument&) {
      parse_error("non-numeric entry in \"" + line + "\"");
    }
    if (i != width) parse_error("too few columns in \"" + line + "\"");
    c.points.push_back(p);
  }
  return c;
}

}  // namespace confact
