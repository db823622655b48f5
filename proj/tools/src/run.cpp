#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "racgk/bredon.hpp"
#include "racgk/cli.hpp"
#include "racgk/completion.hpp"
#include "racgk/counterexample.hpp"
#include "racgk/mayer_vietoris.hpp"
#include "racgk/sampling.hpp"
#include "racgk/smith.hpp"

namespace racgk::cli {

namespace {

constexpr std::pair<Subcommand, const char*> kNames[] = {
    {Subcommand::kKtheory, "ktheory"},   {Subcommand::kBgw, "bgw"},
    {Subcommand::kBredon, "bredon"},     {Subcommand::kLimit, "limit"},
    {Subcommand::kKunneth, "kunneth"},   {Subcommand::kCounterexample, "counterexample"},
    {Subcommand::kMvCheck, "mv-check"},  {Subcommand::kAll, "all"},
};

constexpr std::size_t kOracleSamples = 50;
constexpr std::size_t kShownProducts = 3;
constexpr std::size_t kIdealPowers = 4;
constexpr std::size_t kMvSamples = 100;

bool needs_graph(Subcommand s) {
  return s != Subcommand::kKunneth && s != Subcommand::kCounterexample;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Accumulates named pass/fail assertions for a report.
class Checks {
 public:
  bool add(std::string name, bool passed, std::string detail = {}) {
    Json j;
    j["name"] = name;
    j["passed"] = passed;
    if (!detail.empty()) j["detail"] = std::move(detail);
    items_.push_back(std::move(j));
    if (!passed) failed_.push_back(std::move(name));
    return passed;
  }
  Json json() const { return items_; }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  Json items_ = Json::array();
  std::vector<std::string> failed_;
};

std::vector<VertexMask> masks_of(const std::vector<SphericalSubset>& cliques) {
  std::vector<VertexMask> out;
  for (const auto& c : cliques) out.push_back(c.mask);
  return out;
}

Json relations_json(const std::vector<Relation>& rels) {
  Json a = Json::array();
  for (const auto& r : rels) a.push_back(r.text);
  return a;
}

// ---------------------------------------------------------------------------
// ktheory

Json ktheory_section(const GraphPtr& g, const RunConfig& cfg, Checks& checks) {
  const Presentation p = presentation_report(*g);
  Json s;
  s["generators"] = p.generators;
  s["relations"] = relations_json(p.star_relations);
  s["bar_relations"] = relations_json(p.bar_relations);
  Json basis = Json::array();
  for (const auto& c : p.basis) basis.push_back(labels_json(*g, c.mask));
  s["basis"] = std::move(basis);
  s["rank"] = p.rank;
  s["k1_rank"] = 0;

  // Defining relations hold in the star normal form.
  bool relations_hold = true;
  const auto one = KRingElement::constant(g, Basis::kStar, 1);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    const auto sv = KRingElement::monomial(g, Basis::kStar, bit(v));
    relations_hold = relations_hold && multiply_star(sv, sv) == one;
  }
  for (auto [u, v] : g->non_edges()) {
    const auto su = KRingElement::monomial(g, Basis::kStar, bit(u));
    const auto sv = KRingElement::monomial(g, Basis::kStar, bit(v));
    relations_hold = relations_hold && multiply_star(su, sv) == su + sv - one;
  }
  checks.add("ktheory: defining relations reduce to zero", relations_hold);

  const auto cliques = masks_of(p.basis);
  const auto maximal = maximal_cliques(*g);

  // Restriction to the maximal cliques, on the clique basis, must have rank d.
  std::size_t rows = 0;
  for (VertexMask j : maximal) rows += std::size_t{1} << popcount(j);
  IntMatrix restrict_matrix(rows, cliques.size());
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    std::size_t offset = 0;
    for (VertexMask j : maximal) {
      const auto r = restrict_to_clique(KRingElement::monomial(g, Basis::kStar, cliques[c]), j);
      for (const auto& [k, v] : r.terms()) restrict_matrix(offset + extract_bits(k, j), c) = v;
      offset += std::size_t{1} << popcount(j);
    }
  }
  const std::size_t restrict_rank = integer_rank(restrict_matrix);
  s["maximal_clique_restriction_rank"] = restrict_rank;
  checks.add("ktheory: restriction to maximal cliques is injective", restrict_rank == cliques.size());

  SampleRng rng(cfg.seed);
  Json samples = Json::array();
  std::size_t agree = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < kOracleSamples; ++i) {
    const auto a = random_element(g, Basis::kStar, cliques, rng);
    const auto b = random_element(g, Basis::kStar, cliques, rng);
    const auto star = multiply_star(a, b);
    const auto bar = multiply_bar(convert_basis(a, Basis::kBar), convert_basis(b, Basis::kBar));
    bool ok = convert_basis(star, Basis::kBar) == bar;
    for (VertexMask j : maximal) {
      const auto ca = character_evaluation(restrict_to_clique(a, j));
      const auto cb = character_evaluation(restrict_to_clique(b, j));
      const auto cp = character_evaluation(restrict_to_clique(star, j));
      for (std::size_t x = 0; ok && x < cp.size(); ++x) ok = cp[x] == ca[x] * cb[x];
    }
    if (ok)
      ++agree;
    else if (first_bad.empty())
      first_bad = "sample " + std::to_string(i);
    if (i < kShownProducts) {
      Json sample;
      sample["a"] = to_json(a);
      sample["b"] = to_json(b);
      sample["product"] = to_json(star);
      samples.push_back(std::move(sample));
    }
  }
  s["sample_products"] = std::move(samples);
  Json oracle;
  oracle["seed"] = cfg.seed;
  oracle["pairs"] = kOracleSamples;
  oracle["agreeing"] = agree;
  s["oracle_triangle"] = std::move(oracle);
  checks.add("ktheory: star rewriting, bar structure constants and characters agree", agree == kOracleSamples,
             first_bad);
  return s;
}

// ---------------------------------------------------------------------------
// bgw

Json bgw_section(const GraphPtr& g, const RunConfig& cfg, Checks& checks) {
  const Presentation p = presentation_report(*g);
  const unsigned prec = cfg.precision;
  Json s;
  Json gens = Json::array();
  for (const auto& l : g->labels()) gens.push_back(l + "bar");
  s["generators"] = std::move(gens);
  s["relations"] = relations_json(p.bar_relations);
  s["k1_rank"] = 0;
  s["precision"] = prec;
  Json additive;
  additive["integer_summand"] = "Z";
  Json adic = Json::array();
  for (const auto& c : p.basis)
    if (!c.empty()) adic.push_back(labels_json(*g, c.mask));
  additive["two_adic_summands"] = std::move(adic);
  additive["two_adic_count"] = p.rank - 1;
  s["additive_structure"] = std::move(additive);

  auto bar = [&](VertexMask m, long c = 1) { return KRingElement::monomial(g, Basis::kBar, m, c); };
  auto completed_zero = CompletedElement(g, prec);

  bool square_rel = true;
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    const auto sb = bar(bit(v));
    const auto rhs = sb + KRingElement::constant(g, Basis::kBar, 2);
    square_rel = square_rel && multiply_bar(sb, rhs).is_zero() &&
                 completed_multiply(complete(sb, prec), complete(rhs, prec)) == completed_zero;
  }
  checks.add("bgw: sbar(sbar + 2) = 0 for every vertex", square_rel);

  bool non_edge_rel = true;
  for (auto [u, v] : g->non_edges())
    non_edge_rel = non_edge_rel && multiply_bar(bar(bit(u)), bar(bit(v))).is_zero() &&
                   completed_multiply(complete(bar(bit(u)), prec), complete(bar(bit(v)), prec)) == completed_zero;
  checks.add("bgw: sbar*tbar = 0 for every non-edge", non_edge_rel);

  bool idempotent_rule = true;
  for (const auto& c : p.basis) {
    const auto m = bar(c.mask);
    BigInt factor = 1;
    mpz_mul_2exp(factor.get_mpz_t(), factor.get_mpz_t(), c.size());
    if (c.size() % 2) factor = -factor;
    const auto expected = m * factor;
    idempotent_rule = idempotent_rule && multiply_bar(m, m) == expected &&
                      completed_multiply(complete(m, prec), complete(m, prec)) == complete(expected, prec);
  }
  checks.add("bgw: mbar_J^2 = (-2)^|J| mbar_J for every clique", idempotent_rule);

  // Completion is multiplicative on seeded samples.
  SampleRng rng(cfg.seed ^ 0x5bd1e995u);
  const auto cliques = masks_of(p.basis);
  bool hom = true;
  for (std::size_t i = 0; i < kOracleSamples; ++i) {
    const auto a = random_element(g, Basis::kBar, cliques, rng);
    const auto b = random_element(g, Basis::kBar, cliques, rng);
    hom = hom && complete(multiply_bar(a, b), prec) == completed_multiply(complete(a, prec), complete(b, prec));
  }
  checks.add("bgw: truncated completion is multiplicative", hom);

  const auto powers = ideal_powers(g, kIdealPowers + 1);
  Json ideals = Json::array();
  bool nested = true;
  for (std::size_t k = 0; k < kIdealPowers; ++k) {
    Json j;
    j["k"] = powers[k].power;
    j["rank"] = powers[k].form.rank();
    const BigInt index = lattice_index(powers[k], powers[k + 1]);
    j["index_of_next_power"] = decimal(index);
    ideals.push_back(std::move(j));
    nested = nested && lattice_contains(powers[k].form, powers[k + 1].form) &&
             (powers[k].form.rank() == 0 || index > 1);
  }
  s["ideal_powers"] = std::move(ideals);
  checks.add("bgw: augmentation ideal powers are strictly nested", nested);
  return s;
}

// ---------------------------------------------------------------------------
// bredon

Json bredon_section(const GraphPtr& g, const RunConfig& cfg, Checks& checks, std::size_t& h0_rank) {
  const BredonComplex b = build_bredon_complex(*g);
  const auto h = cohomology(b.complex);
  Json s;
  s["cube_orbits"] = cube_orbit_counts(b.cliques);
  s["cochain_ranks"] = b.complex.ranks;
  s["cohomology"] = to_json(h);
  checks.add("bredon: d o d = 0", b.complex.squares_to_zero());
  h0_rank = h.empty() ? 0 : h[0].free_rank;
  checks.add("bredon: H^0 is free of rank d", !h.empty() && h[0].torsion.empty() && h0_rank == b.cliques.size(),
             "H^0 rank " + std::to_string(h0_rank) + ", d = " + std::to_string(b.cliques.size()));
  bool higher = true;
  for (std::size_t k = 1; k < h.size(); ++k) higher = higher && h[k].vanishes();
  checks.add("bredon: H^n = 0 for n > 0", higher);

  if (cfg.dump_dir) {
    std::filesystem::create_directories(*cfg.dump_dir);
    for (std::size_t k = 0; k < b.complex.differentials.size(); ++k) {
      const auto path = std::filesystem::path(*cfg.dump_dir) / ("d" + std::to_string(k) + ".txt");
      std::ofstream os(path);
      if (!os) throw UsageError("cannot write '" + path.string() + "'");
      b.complex.differentials[k].write_triplets(os);
    }
    s["dumped_to"] = *cfg.dump_dir;
  }
  return s;
}

// ---------------------------------------------------------------------------
// limit

Json limit_section(const GraphPtr& g, Checks& checks, std::size_t& limit_rank) {
  const LimitLattice limit = inverse_limit(*g);
  const std::size_t d = limit.cliques.size();
  limit_rank = limit.rank();
  Json s;
  s["ambient_rank"] = limit.ambient_rank;
  s["rank"] = limit.rank();
  checks.add("limit: rank equals d", limit.rank() == d,
             "rank " + std::to_string(limit.rank()) + ", d = " + std::to_string(d));

  const LatticeMap basis_map = clique_basis_to_limit(*g, limit);
  Json cb;
  cb["rank"] = basis_map.rank();
  cb["in_lattice"] = basis_map.in_lattice;
  cb["isomorphism"] = basis_map.onto(limit.rank()) && basis_map.matrix.cols() == limit.rank();
  s["clique_basis"] = std::move(cb);
  checks.add("limit: clique basis maps isomorphically onto the limit",
             basis_map.onto(limit.rank()) && basis_map.matrix.cols() == limit.rank());

  Json rho;
  if (g->vertex_count() <= kMaxRhoVertices) {
    const RhoReport r = rho_surjectivity(*g, limit);
    rho["source_rank"] = r.source_rank;
    rho["image_rank"] = r.image.rank();
    rho["kernel_rank"] = r.kernel_rank;
    rho["surjective"] = r.surjective;
    checks.add("limit: rho is surjective", r.surjective);
  } else {
    rho["skipped"] = "more than " + std::to_string(kMaxRhoVertices) + " vertices";
  }
  s["rho"] = std::move(rho);
  return s;
}

// ---------------------------------------------------------------------------
// kunneth

Json kunneth_section(const RunConfig& cfg, Checks& checks) {
  Json s = Json::array();
  for (std::size_t n = 1; n <= cfg.kunneth_max; ++n) {
    const KunnethReport r = interval_tensor_kunneth(n);
    Json j;
    j["n"] = n;
    j["ranks"] = r.complex.ranks;
    j["cohomology"] = to_json(r.cohomology);
    s.push_back(std::move(j));
    checks.add("kunneth: n = " + std::to_string(n) + " has H^0 = Z and no higher cohomology", r.passed);
    checks.add("kunneth: n = " + std::to_string(n) + " rank bookkeeping", r.rank_bookkeeping);
  }
  return s;
}

// ---------------------------------------------------------------------------
// counterexample

std::vector<BigInt> vec(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Json matrix_columns(const IntMatrix& m) {
  Json cols = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(decimal(m(r, c)));
    cols.push_back(std::move(col));
  }
  return cols;
}

Json certificate_json(const CharacterTable& source, const std::vector<BigInt>& cert) {
  Json j = Json::object();
  for (std::size_t i = 0; i < cert.size(); ++i)
    if (sgn(cert[i]) != 0) j[source.irreducible_names[i]] = decimal(cert[i]);
  return j;
}

bool alternates_with_parity(const std::vector<std::pair<long, bool>>& sweep) {
  for (auto [k, in] : sweep)
    if (in != (k % 2 == 0)) return false;
  return true;
}

Json sweep_json(const std::vector<std::pair<long, bool>>& sweep) {
  Json a = Json::array();
  for (auto [k, in] : sweep) a.push_back({{"k", k}, {"member", in}});
  return a;
}

Json lattice_json(const CharacterTable& source, const CharacterTable& target, const ImageLattice& lat) {
  Json j;
  j["source"] = source.group_name;
  j["target"] = target.group_name;
  j["source_irreducibles"] = source.irreducible_names;
  j["target_basis"] = target.irreducible_names;
  j["restrictions"] = matrix_columns(lat.restricted);
  j["hnf_basis"] = matrix_columns(lat.hnf_basis());
  return j;
}

Json counterexample_section(Checks& checks) {
  Json s;
  const auto c2 = c2_table();
  const auto lambda = vec({0, 1});

  {
    const auto d8 = d8_complex_table();
    const std::size_t class_map[] = {d8.class_of.at("e"), d8.class_of.at("sigma^2")};
    const auto lat = restriction_image(d8, c2, class_map);
    Json j = lattice_json(d8, c2, lat);
    checks.add("complex D8 -> center: image HNF is span{(1,0), (0,2)}", lat.hnf_basis() == IntMatrix{{1, 0}, {0, 2}});

    const auto m1 = membership(lat, lambda);
    j["lambda"] = {{"member", m1.member}, {"violation", m1.violation}};
    checks.add("complex D8 -> center: [lambda] is not in the image", !m1.member);

    const auto m2 = membership(lat, vec({0, 2}));
    j["two_lambda"] = {{"member", m2.member}, {"certificate", certificate_json(d8, m2.certificate)}};
    bool cert_ok = m2.member && lat.restricted * std::span<const BigInt>(m2.certificate) == vec({0, 2});
    checks.add("complex D8 -> center: 2[lambda] is in the image", cert_ok);
    checks.add("complex D8 -> center: certificate for 2[lambda] is [tau]",
               m2.member && m2.certificate == vec({0, 0, 0, 0, 1}));

    const auto sweep = parity_sweep(lat, lambda, -8, 8);
    j["parity_sweep"] = sweep_json(sweep);
    checks.add("complex D8 -> center: k[lambda] in image iff k even, k in [-8, 8]", alternates_with_parity(sweep));

    Json tau = Json::array();
    for (const auto& c : verify_tau()) {
      tau.push_back({{"identity", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      checks.add("tau: " + c.name, c.passed);
    }
    j["tau_checks"] = std::move(tau);
    s["complex_d8"] = std::move(j);

    const auto trivial = trivial_group_table();
    const std::size_t to_identity[] = {d8.class_of.at("e")};
    const auto lat_triv = restriction_image(d8, trivial, to_identity);
    s["trivial_target"] = lattice_json(d8, trivial, lat_triv);
    checks.add("complex D8 -> trivial group: image is Z[tr]", lat_triv.hnf_basis() == IntMatrix{{1}});
  }
  {
    const auto c4 = c4_real_table();
    const std::size_t class_map[] = {c4.class_of.at("e"), c4.class_of.at("sigma^2")};
    const auto lat = restriction_image(c4, c2, class_map);
    Json j = lattice_json(c4, c2, lat);
    checks.add("real C4 -> C2: image is {m[tr] + 2n[lambda]}", lat.hnf_basis() == IntMatrix{{1, 0}, {0, 2}});
    const auto sweep = parity_sweep(lat, lambda, -8, 8);
    j["parity_sweep"] = sweep_json(sweep);
    checks.add("real C4 -> C2: k[lambda] in image iff k even, k in [-8, 8]", alternates_with_parity(sweep));
    const auto tr_sweep = parity_sweep(lat, vec({1, 0}), -8, 8);
    bool all_tr = true;
    for (auto [k, in] : tr_sweep) all_tr = all_tr && in;
    checks.add("real C4 -> C2: every multiple of [tr] is in the image", all_tr);
    s["real_c4"] = std::move(j);
  }
  return s;
}

// ---------------------------------------------------------------------------
// mv-check

std::pair<VertexMask, VertexMask> read_partition(const Graph& g, const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> parts;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> labels;
    for (std::string l; ls >> l;) labels.push_back(l);
    parts.push_back(std::move(labels));
  }
  while (parts.size() > 2 && parts.back().empty()) parts.pop_back();
  if (parts.size() == 1) parts.emplace_back();
  if (parts.size() != 2) throw UsageError("partition file must contain exactly two lines of vertex labels");
  try {
    return {g.mask_of(parts[0]), g.mask_of(parts[1])};
  } catch (const GraphError& e) {
    throw UsageError(std::string("partition file: ") + e.what());
  }
}

Json mv_section(const GraphPtr& g, const RunConfig& cfg, Checks& checks) {
  const auto [p1, p2] = read_partition(*g, *cfg.partition_path);
  const auto r = mayer_vietoris_check(*g, p1, p2, kMvSamples, cfg.seed);
  Json s;
  s["part1"] = labels_json(*g, p1);
  s["part2"] = labels_json(*g, p2);
  s["ranks"] = {{"whole", r.rank_whole}, {"first", r.rank_first}, {"second", r.rank_second}, {"shared", r.rank_shared}};
  checks.add("mv-check: d = d1 + d2 - d3", r.rank_identity());
  Json sides = Json::array();
  for (const auto& sp : r.splits) {
    sides.push_back({{"side", sp.side},
                     {"samples", sp.samples},
                     {"projection_multiplicative", sp.projection_multiplicative},
                     {"section_multiplicative", sp.section_multiplicative},
                     {"splits", sp.splits}});
    checks.add("mv-check: " + sp.side + " projection is a split ring surjection", sp.passed(), sp.first_failure);
  }
  s["splits"] = std::move(sides);
  return s;
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (auto [s, n] : kNames)
    if (name == n) return s;
  return std::nullopt;
}

const char* to_string(Subcommand s) {
  for (auto [k, n] : kNames)
    if (k == s) return n;
  return "?";
}

void validate(const RunConfig& config) {
  if (config.precision < 1) throw UsageError("--precision must be at least 1");
  if (config.kunneth_max < 1) throw UsageError("--kunneth-max must be at least 1");
  if (config.kunneth_max > kDefaultKunnethCap)
    throw UsageError("--kunneth-max must be at most " + std::to_string(kDefaultKunnethCap));
  if (needs_graph(config.subcommand) && !config.input_path)
    throw UsageError(std::string(to_string(config.subcommand)) + " requires --input FILE");
  if (config.subcommand == Subcommand::kMvCheck && !config.partition_path)
    throw UsageError("mv-check requires --partition FILE");
}

RunResult run(const RunConfig& config) {
  validate(config);
  Json report;
  report["tool"] = "racgk";
  report["subcommand"] = to_string(config.subcommand);
  report["seed"] = config.seed;

  GraphPtr g;
  if (needs_graph(config.subcommand)) {
    g = std::make_shared<const Graph>(parse_graph(read_file(*config.input_path)));
    report["graph"] = graph_to_json(*g);
  }

  Checks checks;
  const auto sub = config.subcommand;
  const bool all = sub == Subcommand::kAll;
  std::size_t h0 = 0, limit_rank = 0;
  if (sub == Subcommand::kKtheory || all) report["ktheory"] = ktheory_section(g, config, checks);
  if (sub == Subcommand::kBgw || all) report["bgw"] = bgw_section(g, config, checks);
  if (sub == Subcommand::kBredon || all) report["bredon"] = bredon_section(g, config, checks, h0);
  if (sub == Subcommand::kLimit || all) report["limit"] = limit_section(g, checks, limit_rank);
  if (sub == Subcommand::kMvCheck || (all && config.partition_path)) report["mv_check"] = mv_section(g, config, checks);
  if (sub == Subcommand::kKunneth || all) report["kunneth"] = kunneth_section(config, checks);
  if (sub == Subcommand::kCounterexample || all) report["counterexample"] = counterexample_section(checks);

  if (all) {
    const std::size_t presentation_rank = presentation_report(*g).rank;
    const std::size_t clique_count = g->vertex_count() <= 20 ? enumerate_spherical_brute_force(*g).size()
                                                             : enumerate_spherical(*g).size();
    report["rank_cross_check"] = {{"presentation", presentation_rank},
                                  {"limit", limit_rank},
                                  {"bredon_h0", h0},
                                  {"clique_count", clique_count}};
    checks.add("all: presentation rank = limit rank = H^0 rank = clique count",
               presentation_rank == limit_rank && limit_rank == h0 && h0 == clique_count);
  }

  report["checks"] = checks.json();
  report["status"] = checks.failed().empty() ? "pass" : "fail";
  return {std::move(report), checks.failed()};
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = run(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DecompositionError& e) {
    err << "error: invalid decomposition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.output_format == OutputFormat::kJson)
    out << result.report.dump(2) << '\n';
  else
    out << render_text(result.report);
  for (const auto& f : result.failed_checks) err << "assertion failed: " << f << '\n';
  return result.failed_checks.empty() ? kExitOk : kExitAssertion;
}

}  // namespace racgk::cli
