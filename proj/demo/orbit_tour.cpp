// Walk the catalog: cohomogeneity, strata and a conserved quantity where one is known.
#include <cstdio>

#include "confact/confact.hpp"

using namespace confact;

int main() {
  for (const auto& e : catalog_list()) {
    const auto param = is_n_family(e.label) ? std::optional<double>(1.0) : std::nullopt;
    const CatalogEntry entry = catalog_get(e.label, param);
    const OrbitReport r = cohomogeneity_with_singular(entry.generators);
    std::printf("%-18s dim %zu  cohomogeneity %d  strata:", entry.label.c_str(), entry.dim(), r.cohomogeneity);
    for (const auto& s : r.strata) std::printf(" %d(%zu)", s.dim, s.count);
    const VecX base = entry.model == Model::Euclid ? VecX(Vec3(0.8, -0.5, 0.6))
                                                   : VecX(SpherePoint::from_unit4({0.5, 0.5, 0.5, 0.5}).n());
    try {
      PointCloud c = orbit_cloud(entry.generators, base, 100);
      c.group_label = entry.label;
      c.parameter = param;
      const InvariantReport inv = invariant_check(entry.label, c);
      std::printf("  %s drift %.1e", inv.quantity.c_str(), inv.max_deviation);
    } catch (const Error&) {
    }
    std::printf("\n");
  }
}
