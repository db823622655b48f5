#include "racgk/sampling.hpp"

namespace racgk {

KRingElement random_element(const GraphPtr& graph, Basis basis, const std::vector<VertexMask>& cliques,
                            SampleRng& rng, SampleShape shape) {
  KRingElement e(graph, basis);
  const auto terms = rng.below(shape.max_terms + 1);
  for (std::uint64_t i = 0; i < terms; ++i) {
    const VertexMask k = cliques[rng.below(cliques.size())];
    e.add_term(k, BigInt(static_cast<long>(rng.between(-shape.coeff_bound, shape.coeff_bound))));
  }
  return e;
}

}  // namespace racgk
