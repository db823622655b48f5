#pragma once

#include <cstdint>
#include <random>

#include "racgk/ktheory.hpp"

namespace racgk {

// Seeded source for randomized spot checks. Draws are reduced by modulo so the
// stream is identical on every platform for a given seed.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct SampleShape {
  std::size_t max_terms = 6;
  std::int64_t coeff_bound = 3;
};

// Random element with up to `shape.max_terms` clique monomials and coefficients
// in [-coeff_bound, coeff_bound].
KRingElement random_element(const GraphPtr& graph, Basis basis, const std::vector<VertexMask>& cliques,
                            SampleRng& rng, SampleShape shape = {});

}  // namespace racgk
