#include "racgk/mayer_vietoris.hpp"

#include "racgk/sampling.hpp"

namespace racgk {

KRingElement project_to_part(const KRingElement& a, VertexMask part, const GraphPtr& subgraph) {
  const KRingElement bar = convert_basis(a, Basis::kBar);
  KRingElement out(subgraph, Basis::kBar);
  for (const auto& [k, c] : bar.terms())
    if ((k & ~part) == 0) out.add_term(extract_bits(k, part), c);
  return out;
}

KRingElement include_from_part(const KRingElement& a, VertexMask part, const GraphPtr& whole) {
  const KRingElement bar = convert_basis(a, Basis::kBar);
  KRingElement out(whole, Basis::kBar);
  for (const auto& [k, c] : bar.terms()) out.add_term(deposit_bits(k, part), c);
  return out;
}

bool MayerVietorisReport::passed() const {
  if (!rank_identity()) return false;
  for (const auto& s : splits)
    if (!s.passed()) return false;
  return true;
}

namespace {

std::vector<VertexMask> clique_masks(const Graph& g) {
  std::vector<VertexMask> out;
  for (const auto& c : enumerate_spherical(g)) out.push_back(c.mask);
  return out;
}

SplitCheck check_side(const GraphPtr& whole, const GraphPtr& sub, VertexMask part, const char* side,
                      std::size_t samples, SampleRng& rng) {
  SplitCheck check;
  check.side = side;
  check.samples = samples;
  const auto whole_cliques = clique_masks(*whole);
  const auto sub_cliques = clique_masks(*sub);
  auto note = [&](const std::string& what) {
    if (check.first_failure.empty()) check.first_failure = what;
  };

  const auto one = KRingElement::constant(whole, Basis::kBar, 1);
  if (!(project_to_part(one, part, sub) == KRingElement::constant(sub, Basis::kBar, 1))) {
    check.projection_unital = false;
    note("projection does not preserve the unit");
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = random_element(whole, Basis::kBar, whole_cliques, rng);
    const auto b = random_element(whole, Basis::kBar, whole_cliques, rng);
    const auto lhs = project_to_part(multiply_bar(a, b), part, sub);
    const auto rhs = multiply_bar(project_to_part(a, part, sub), project_to_part(b, part, sub));
    if (!(lhs == rhs)) {
      check.projection_multiplicative = false;
      note("projection fails multiplicativity on sample " + std::to_string(i));
    }
    const auto x = random_element(sub, Basis::kBar, sub_cliques, rng);
    const auto y = random_element(sub, Basis::kBar, sub_cliques, rng);
    const auto up = include_from_part(multiply_bar(x, y), part, whole);
    const auto up2 = multiply_bar(include_from_part(x, part, whole), include_from_part(y, part, whole));
    if (!(up == up2)) {
      check.section_multiplicative = false;
      note("section fails multiplicativity on sample " + std::to_string(i));
    }
    if (!(project_to_part(include_from_part(x, part, whole), part, sub) == x)) {
      check.splits = false;
      note("projection after section is not the identity on sample " + std::to_string(i));
    }
  }
  return check;
}

}  // namespace

MayerVietorisReport mayer_vietoris_check(const Graph& g, VertexMask part1, VertexMask part2,
                                         std::size_t samples, std::uint64_t seed) {
  const Decomposition d = validate_decomposition(g, part1, part2);
  auto whole = std::make_shared<const Graph>(g);
  auto first = std::make_shared<const Graph>(d.first);
  auto second = std::make_shared<const Graph>(d.second);

  MayerVietorisReport r;
  r.rank_whole = enumerate_spherical(g).size();
  r.rank_first = enumerate_spherical(d.first).size();
  r.rank_second = enumerate_spherical(d.second).size();
  r.rank_shared = enumerate_spherical(d.shared).size();

  SampleRng rng(seed);
  r.splits.push_back(check_side(whole, first, part1, "first", samples, rng));
  r.splits.push_back(check_side(whole, second, part2, "second", samples, rng));
  return r;
}

}  // namespace racgk
