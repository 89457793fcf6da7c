#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "confact/subalgebra.hpp"

namespace confact {

/// Subgroup recorded for reference only; it has generators but no claims.
struct CatalogSubEntry {
  std::string label;
  std::string description;
  std::vector<LorentzAlgElement> generators;
};

struct CatalogEntry {
  std::string label;    ///< canonical ASCII name, the CLI vocabulary
  std::string display;  ///< typeset name
  Model model = Model::Euclid;
  AnySubalgebra generators;
  std::optional<double> parameter;  ///< a of the N_a family
  int claimed_cohomogeneity = 0;
  bool compact = false;
  std::string orbit_description;
  std::string source;
  std::vector<CatalogSubEntry> sub_entries;

  std::size_t dim() const {
    return std::visit([](const auto& g) { return g.dim(); }, generators);
  }
  bool has_parameter() const { return parameter.has_value(); }
};

namespace catalog_detail {

struct EuclidRow {
  const char* label;
  const char* display;
  bool n_family;
  int cohomogeneity;
  bool compact;
  const char* orbits;
  const char* source;
};

// Table 5 in row-major order.
inline const std::vector<EuclidRow>& euclid_rows() {
  static const std::vector<EuclidRow> rows = {
      {"R+*|xR3", "ℝ₊*⋉ℝ³", false, 0, false, "transitive on E³", "Table 5"},
      {"(R+*xSO(3))|xR3", "(ℝ₊*×SO(3))⋉ℝ³", false, 0, false, "transitive on E³", "Table 5"},
      {"SO(3)|xR3", "SO(3)⋉ℝ³", false, 0, false, "transitive on E³", "Table 5"},
      {"Na|xR3", "𝒩_a⋉ℝ³", true, 0, false, "transitive on E³", "Table 5"},
      {"R3", "ℝ³", false, 0, false, "transitive on E³", "Table 5; Table 2"},
      {"SO(2)|xR3", "SO(2)⋉ℝ³", false, 0, false, "transitive on E³", "Table 5"},
      {"(R+*xSO(2))|xR3", "(ℝ₊*×SO(2))⋉ℝ³", false, 0, false, "transitive on E³", "Table 5"},
      {"S|xP", "𝒮⋉𝒫", false, 0, false, "transitive on E³; tangent field (y,−x,1) with e₁, e₂", "Table 5"},
      {"SO(2)|xP", "SO(2)⋉𝒫", false, 1, false, "same orbits as 𝒫: affine planes z = const", "Table 5"},
      {"(R+*xSO(2))|xP", "(ℝ₊*×SO(2))⋉𝒫", false, 0, false,
       "plane z = 0 and the two open half-spaces z > 0, z < 0", "Table 5"},
      {"R+*|xP", "ℝ₊*⋉𝒫", false, 0, false, "plane z = 0 and the two open half-spaces z > 0, z < 0",
       "Table 5; Table 2"},
      {"Na|xP", "𝒩_a⋉𝒫", true, 0, false, "plane z = 0 and the two open half-spaces z > 0, z < 0", "Table 5"},
      {"P", "𝒫", false, 1, false, "affine planes z = const", "Table 5; Table 1"},
      {"SO(2)xL", "SO(2)×ℒ", false, 1, false, "z-axis pointwise fixed by SO(2); cylinders x²+y² = r² elsewhere",
       "Table 5; Table 1"},
      {"(R+*xSO(2))|xL", "(ℝ₊*×SO(2))⋉ℒ", false, 0, false, "the z-axis and its open complement",
       "Table 5; Table 2"},
      {"Na|xL", "𝒩_a⋉ℒ", true, 1, false, "the z-axis and planes diffeomorphic to ℝ² off the axis",
       "Table 5; Table 1"},
      {"R+*|xL", "ℝ₊*⋉ℒ", false, 1, false, "the z-axis and affine half-planes bounded by it", "Table 5; Table 1"},
      {"R+*xSO(3)", "ℝ₊*×SO(3)", false, 0, false, "the origin and its complement", "Table 5; Table 2"},
      {"SO(3)", "SO(3)", false, 1, true, "the origin and the spheres ‖x‖ = r", "Table 5; Table 1"},
      {"R+*xSO(2)", "ℝ₊*×SO(2)", false, 1, false,
       "the origin, two half-axes, and cylinders S¹×ℝ (cones about the z-axis)", "Table 5; Table 1"},
  };
  return rows;
}

inline std::vector<ConfAlgElement> euclid_generators(const std::string& label, double a) {
  using namespace gen;
  const auto R3 = std::vector<ConfAlgElement>{e(0), e(1), e(2)};
  auto with = [](std::vector<ConfAlgElement> head, const std::vector<ConfAlgElement>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  const std::vector<ConfAlgElement> P = {e(0), e(1)};
  const std::vector<ConfAlgElement> L = {e(2)};
  if (label == "R+*|xR3") return with({lambda()}, R3);
  if (label == "(R+*xSO(3))|xR3") return with({lambda(), X(), Y(), Z()}, R3);
  if (label == "SO(3)|xR3") return with({X(), Y(), Z()}, R3);
  if (label == "Na|xR3") return with({screw_homothety(a)}, R3);
  if (label == "R3") return R3;
  if (label == "SO(2)|xR3") return with({X()}, R3);
  if (label == "(R+*xSO(2))|xR3") return with({lambda(), X()}, R3);
  if (label == "S|xP") return with({X() + e(2)}, P);
  if (label == "SO(2)|xP") return with({X()}, P);
  if (label == "(R+*xSO(2))|xP") return with({lambda(), X()}, P);
  if (label == "R+*|xP") return with({lambda()}, P);
  if (label == "Na|xP") return with({screw_homothety(a)}, P);
  if (label == "P") return P;
  if (label == "SO(2)xL") return with({X()}, L);
  if (label == "(R+*xSO(2))|xL") return with({lambda(), X()}, L);
  if (label == "Na|xL") return with({screw_homothety(a)}, L);
  if (label == "R+*|xL") return with({lambda()}, L);
  if (label == "R+*xSO(3)") return {lambda(), X(), Y(), Z()};
  if (label == "SO(3)") return {X(), Y(), Z()};
  if (label == "R+*xSO(2)") return {lambda(), X()};
  throw Error(ErrorCode::UnknownLabel, label);
}

struct LorentzRow {
  const char* label;
  const char* display;
  int cohomogeneity;
  bool compact;
  const char* orbits;
  const char* source;
};

inline const std::vector<LorentzRow>& lorentz_rows() {
  static const std::vector<LorentzRow> rows = {
      {"SO0(1,2)", "SO₀(1,2)", 1, false,
       "great circle n₄=n₅=0; codimension-one leaves of H²×S¹ with the S¹ factor fixed", "Table 1"},
      {"SO0(1,3)", "SO₀(1,3)", 0, false, "great sphere u=0 and the two hyperbolic balls u>0, u<0", "Table 2"},
      {"SO0(1,2)xSO(2)", "SO₀(1,2)×SO(2)", 0, false, "great circle n₄=n₅=0 and its complement H²×S¹",
       "Table 2"},
      {"SO0(1,4)", "SO₀(1,4)", 0, false, "transitive on S³", "Table 2"},
      {"SO(3)-block", "SO(3)", 1, true, "two antipodal fixed points and 2-spheres between them", "Table 1"},
      {"SO(2)xSO(2)", "SO(2)×SO(2)", 1, true, "two circle orbits and tori in between", "Table 1"},
      {"SO(4)", "SO(4)", 0, true, "transitive on S³ (round isometries)", "sphere-side"},
  };
  return rows;
}

inline std::vector<LorentzAlgElement> lorentz_generators(const std::string& label) {
  using lorentz_gen::boost;
  using lorentz_gen::rotation;
  if (label == "SO0(1,2)") return {boost(1), boost(2), rotation(1, 2)};
  if (label == "SO0(1,3)")
    return {boost(1), boost(2), boost(3), rotation(1, 2), rotation(1, 3), rotation(2, 3)};
  if (label == "SO0(1,2)xSO(2)") return {boost(1), boost(2), rotation(1, 2), rotation(3, 4)};
  if (label == "SO0(1,4)") {
    std::vector<LorentzAlgElement> all;
    for (int j = 1; j < 5; ++j) all.push_back(boost(j));
    for (int i = 1; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) all.push_back(rotation(i, j));
    return all;
  }
  if (label == "SO(3)-block") return {rotation(2, 3), rotation(2, 4), rotation(3, 4)};
  if (label == "SO(2)xSO(2)") return {rotation(1, 2), rotation(3, 4)};
  if (label == "SO(4)") {
    std::vector<LorentzAlgElement> all;
    for (int i = 1; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) all.push_back(rotation(i, j));
    return all;
  }
  throw Error(ErrorCode::UnknownLabel, label);
}

// Subgroups of SO₀(1,2) acting on (v₁, v₂, v₃); the null vector (1,1,0,0,0)
// spans the line preserved by the affine and parabolic subgroups.
inline std::vector<CatalogSubEntry> so12_sub_entries() {
  using lorentz_gen::boost;
  using lorentz_gen::rotation;
  const LorentzAlgElement parabolic = boost(2) + rotation(1, 2);
  return {
      {"Aff", "affine group: parabolic and hyperbolic elements, preserves a lightlike line", {boost(1), parabolic}},
      {"E", "elliptic one-parameter subgroup, preserves a unique timelike line", {rotation(1, 2)}},
      {"H", "parabolic one-parameter subgroup, preserves a unique lightlike line", {parabolic}},
      {"P", "hyperbolic one-parameter subgroup, preserves two lightlike lines", {boost(1)}},
  };
}

inline std::string fold(std::string s) {
  const std::pair<const char*, const char*> subs[] = {
      {"⋉", "|x"},  {"×", "x"},    {"ℝ₊*", "r+*"}, {"ℝ₊", "r+"}, {"ℝ³", "r3"},  {"𝒩_a", "na"},
      {"𝒩ₐ", "na"}, {"𝒩", "n"},    {"𝒮", "s"},     {"𝒫", "p"},   {"ℒ", "l"},    {"SO₀", "so0"},
      {"so_0", "so0"}, {"so_o", "so0"}, {"r_+^*", "r+*"}, {"r^3", "r3"}, {"n_a", "na"},
  };
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  for (const auto& [from, to] : subs) {
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + std::string(to).size()))
      out.replace(pos, std::string(from).size(), to);
  }
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& [from, to] : subs) {
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + std::string(to).size()))
      out.replace(pos, std::string(from).size(), to);
  }
  // Semidirect and direct products share one folded spelling; the catalog never
  // holds both for the same pair of factors.
  for (const char* op : {"|x", "x|", "><", "na*"}) {
    const std::string o(op);
    const std::string repl = o == "na*" ? "nax" : "x";
    for (std::size_t pos = out.find(o); pos != std::string::npos; pos = out.find(o, pos + repl.size()))
      out.replace(pos, o.size(), repl);
  }
  return out;
}

inline const std::vector<std::pair<std::string, std::string>>& aliases() {
  static const std::vector<std::pair<std::string, std::string>> a = {
      {"(r+xso(2))xl", "(R+*xSO(2))|xL"},
      {"so(3)xr3", "SO(3)|xR3"},
      {"so0(1,2)xso(2)", "SO0(1,2)xSO(2)"},
      {"so(3)block", "SO(3)-block"},
      {"so(3)-sphere", "SO(3)-block"},
  };
  return a;
}

}  // namespace catalog_detail

inline bool is_n_family(const std::string& canonical_label) {
  return canonical_label == "Na|xR3" || canonical_label == "Na|xP" || canonical_label == "Na|xL";
}

/// Maps a user spelling (ASCII or typeset, any case) to the canonical label.
inline std::string canonical_label(const std::string& name) {
  const std::string key = catalog_detail::fold(name);
  for (const auto& row : catalog_detail::euclid_rows())
    if (catalog_detail::fold(row.label) == key) return row.label;
  for (const auto& row : catalog_detail::lorentz_rows())
    if (catalog_detail::fold(row.label) == key) return row.label;
  for (const auto& [alias, target] : catalog_detail::aliases())
    if (catalog_detail::fold(alias) == key) return target;
  throw Error(ErrorCode::UnknownLabel, "no catalog group named '" + name + "'");
}

/**
 * @brief Catalog lookup.
 *
 * `a` is required exactly for the N_a families and must be nonzero.
 */
inline CatalogEntry catalog_get(const std::string& name, std::optional<double> a = std::nullopt) {
  const std::string label = canonical_label(name);
  for (const auto& row : catalog_detail::euclid_rows()) {
    if (row.label != label) continue;
    if (row.n_family && !a) throw Error(ErrorCode::MissingParameter, label + " needs the parameter a");
    if (row.n_family && *a == 0.0) throw Error(ErrorCode::MissingParameter, "a must be nonzero for " + label);
    CatalogEntry e;
    e.label = row.label;
    e.display = row.display;
    e.model = Model::Euclid;
    e.generators = EuclidSubalgebra(catalog_detail::euclid_generators(label, row.n_family ? *a : 0.0));
    if (row.n_family) e.parameter = *a;
    e.claimed_cohomogeneity = row.cohomogeneity;
    e.compact = row.compact;
    e.orbit_description = row.orbits;
    e.source = row.source;
    return e;
  }
  for (const auto& row : catalog_detail::lorentz_rows()) {
    if (row.label != label) continue;
    CatalogEntry e;
    e.label = row.label;
    e.display = row.display;
    e.model = Model::Lorentz;
    e.generators = LorentzSubalgebra(catalog_detail::lorentz_generators(label));
    e.claimed_cohomogeneity = row.cohomogeneity;
    e.compact = row.compact;
    e.orbit_description = row.orbits;
    e.source = row.source;
    if (label == "SO0(1,2)") e.sub_entries = catalog_detail::so12_sub_entries();
    return e;
  }
  throw Error(ErrorCode::UnknownLabel, name);
}

struct CatalogFilter {
  std::optional<Model> model;
  std::optional<int> cohomogeneity;
};

/// All entries in table order (N_a families with a = 1), optionally filtered.
inline std::vector<CatalogEntry> catalog_list(CatalogFilter filter = {}) {
  std::vector<CatalogEntry> out;
  auto keep = [&](const CatalogEntry& e) {
    return (!filter.model || e.model == *filter.model) &&
           (!filter.cohomogeneity || e.claimed_cohomogeneity == *filter.cohomogeneity);
  };
  for (const auto& row : catalog_detail::euclid_rows()) {
    CatalogEntry e = catalog_get(row.label, row.n_family ? std::optional<double>(1.0) : std::nullopt);
    if (keep(e)) out.push_back(std::move(e));
  }
  for (const auto& row : catalog_detail::lorentz_rows()) {
    CatalogEntry e = catalog_get(row.label);
    if (keep(e)) out.push_back(std::move(e));
  }
  return out;
}

/// Canonical labels of the 20 similarity-group entries, in table order.
inline std::vector<std::string> euclid_labels() {
  std::vector<std::string> out;
  for (const auto& row : catalog_detail::euclid_rows()) out.emplace_back(row.label);
  return out;
}

inline std::vector<std::string> lorentz_labels() {
  std::vector<std::string> out;
  for (const auto& row : catalog_detail::lorentz_rows()) out.emplace_back(row.label);
  return out;
}

}  // namespace confact
