// Conjugate a catalog entry by a random similarity and classify it back.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "confact/confact.hpp"

using namespace confact;

int main(int argc, char** argv) {
  const std::string label = argc > 1 ? argv[1] : "Na|xP";
  const double a = argc > 2 ? std::atof(argv[2]) : 1.7;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : kDefaultSeed;
  try {
    const std::string canon = canonical_label(label);
    const auto param = is_n_family(canon) ? std::optional<double>(a) : std::nullopt;
    const auto basis = as_euclid(catalog_get(canon, param).generators).basis();
    rnd::Rng rng(seed);
    const ConfElement h = rnd::similarity(rng);
    std::vector<ConfAlgElement> disguised;
    for (const auto& b : basis) disguised.push_back(adjoint(h, b));

    std::printf("input %s, conjugated by alpha = %.4f\n", canon.c_str(), h.alpha());
    std::printf("%s\n", to_json(AnySubalgebra(EuclidSubalgebra(disguised))).dump().c_str());
    const ClassificationResult r = classify(disguised);
    std::printf("classified as %s", r.label.c_str());
    if (r.parameter) std::printf(", a = %.12g", *r.parameter);
    std::printf("\nresidual %.3e\n", r.residual);
    return r.label == canon ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
