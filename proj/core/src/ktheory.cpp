#include "racgk/ktheory.hpp"

#include <unordered_map>

namespace racgk {

const char* to_string(Basis b) { return b == Basis::kStar ? "star" : "bar"; }

bool same_graph(const Graph& a, const Graph& b) { return &a == &b || a == b; }

KRingElement::KRingElement(GraphPtr graph, Basis basis) : graph_(std::move(graph)), basis_(basis) {
  if (!graph_) throw AlgebraError("KRingElement requires a graph");
}

KRingElement KRingElement::monomial(GraphPtr graph, Basis basis, VertexMask clique, const BigInt& coeff) {
  KRingElement e(std::move(graph), basis);
  e.add_term(clique, coeff);
  return e;
}

KRingElement KRingElement::constant(GraphPtr graph, Basis basis, const BigInt& value) {
  return monomial(std::move(graph), basis, 0, value);
}

BigInt KRingElement::coefficient(VertexMask clique) const {
  auto it = terms_.find(clique);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void KRingElement::add_term(VertexMask clique, const BigInt& coeff) {
  if (!graph_->is_clique(clique) || (clique & ~graph_->all_vertices()) != 0)
    throw AlgebraError("monomial support is not a clique of the graph");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(clique, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void KRingElement::require_compatible(const KRingElement& other, const char* op) const {
  if (!same_graph(*graph_, *other.graph_)) throw AlgebraError(std::string(op) + ": graph mismatch");
  if (basis_ != other.basis_) throw AlgebraError(std::string(op) + ": basis mismatch");
}

KRingElement& KRingElement::operator+=(const KRingElement& other) {
  require_compatible(other, "add");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

KRingElement& KRingElement::operator-=(const KRingElement& other) {
  require_compatible(other, "subtract");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

KRingElement& KRingElement::operator*=(const BigInt& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const KRingElement& a, const KRingElement& b) {
  return a.basis_ == b.basis_ && same_graph(*a.graph_, *b.graph_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Star basis: rewriting

class StarRewriter {
 public:
  explicit StarRewriter(const Graph& g) : g_(g) {}

  using Form = std::vector<std::pair<VertexMask, BigInt>>;

  const Form& normal_form(VertexMask k) {
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Form form;
    if (g_.is_clique(k)) {
      form.emplace_back(k, BigInt(1));
    } else {
      const auto [s, t] = smallest_non_adjacent_pair(k);
      std::map<VertexMask, BigInt> acc;
      for (const auto& [m, c] : normal_form(k & ~bit(t))) acc[m] += c;
      for (const auto& [m, c] : normal_form(k & ~bit(s))) acc[m] += c;
      for (const auto& [m, c] : normal_form(k & ~bit(s) & ~bit(t))) acc[m] -= c;
      for (auto& [m, c] : acc)
        if (sgn(c) != 0) form.emplace_back(m, std::move(c));
    }
    return memo_.emplace(k, std::move(form)).first->second;
  }

  void accumulate(KRingElement& out, VertexMask k, const BigInt& coeff) {
    for (const auto& [m, c] : normal_form(k)) out.add_term(m, coeff * c);
  }

 private:
  std::pair<std::size_t, std::size_t> smallest_non_adjacent_pair(VertexMask k) const {
    for (VertexMask rest = k; rest; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      const VertexMask above = k & ~((bit(s) << 1) - 1) & ~g_.neighbors(s);
      if (above) return {s, static_cast<std::size_t>(std::countr_zero(above))};
    }
    throw AlgebraError("internal: clique passed to the rewriter");
  }

  const Graph& g_;
  std::unordered_map<VertexMask, Form> memo_;
};

KRingElement multiply_star(const KRingElement& a, const KRingElement& b) {
  if (!same_graph(a.graph(), b.graph())) throw AlgebraError("multiply_star: graph mismatch");
  if (a.basis() != Basis::kStar || b.basis() != Basis::kStar)
    throw AlgebraError("multiply_star: operands must be in the star basis");
  std::map<VertexMask, BigInt> raw;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) raw[ka ^ kb] += ca * cb;
  StarRewriter rewriter(a.graph());
  KRingElement out(a.graph_ptr(), Basis::kStar);
  for (const auto& [k, c] : raw)
    if (sgn(c) != 0) rewriter.accumulate(out, k, c);
  return out;
}

KRingElement star_normal_form(const GraphPtr& graph, VertexMask support) {
  if ((support & ~graph->all_vertices()) != 0) throw AlgebraError("star_normal_form: unknown vertices");
  StarRewriter rewriter(*graph);
  KRingElement out(graph, Basis::kStar);
  rewriter.accumulate(out, support, BigInt(1));
  return out;
}

// ---------------------------------------------------------------------------
// Bar basis: structure constants

KRingElement multiply_bar(const KRingElement& a, const KRingElement& b) {
  if (!same_graph(a.graph(), b.graph())) throw AlgebraError("multiply_bar: graph mismatch");
  if (a.basis() != Basis::kBar || b.basis() != Basis::kBar)
    throw AlgebraError("multiply_bar: operands must be in the bar basis");
  const Graph& g = a.graph();
  KRingElement out(a.graph_ptr(), Basis::kBar);
  for (const auto& [ja, ca] : a.terms())
    for (const auto& [jb, cb] : b.terms()) {
      const VertexMask u = ja | jb;
      if (!g.is_clique(u)) continue;
      BigInt c = ca * cb;
      mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), popcount(ja & jb));
      if (popcount(ja & jb) % 2) c = -c;
      out.add_term(u, c);
    }
  return out;
}

KRingElement multiply(const KRingElement& a, const KRingElement& b) {
  if (a.basis() != b.basis()) throw AlgebraError("multiply: basis mismatch");
  return a.basis() == Basis::kStar ? multiply_star(a, b) : multiply_bar(a, b);
}

KRingElement convert_basis(const KRingElement& a, Basis target) {
  if (a.basis() == target) return a;
  KRingElement out(a.graph_ptr(), target);
  const bool to_bar = target == Basis::kBar;
  for (const auto& [j, c] : a.terms()) {
    VertexMask sub = j;
    for (;;) {
      // star → bar: m*_J = Σ_{K⊆J} m̄_K.  bar → star: m̄_J = Σ_{K⊆J} (−1)^{|J∖K|} m*_K.
      const bool negative = !to_bar && (popcount(j & ~sub) % 2 == 1);
      out.add_term(sub, negative ? BigInt(-c) : c);
      if (sub == 0) break;
      sub = (sub - 1) & j;
    }
  }
  return out;
}

RepRingElement restrict_to_clique(const KRingElement& a, VertexMask target) {
  if (!a.graph().is_clique(target) || (target & ~a.graph().all_vertices()) != 0)
    throw AlgebraError("restrict_to_clique: target is not a clique");
  const KRingElement star = convert_basis(a, Basis::kStar);
  RepRingElement out(target);
  for (const auto& [k, c] : star.terms()) out.add_term(k & target, c);
  return out;
}

BigInt augmentation(const KRingElement& a) {
  if (a.basis() == Basis::kBar) return a.coefficient(0);
  BigInt sum = 0;
  for (const auto& [k, c] : a.terms()) sum += c;
  return sum;
}

// ---------------------------------------------------------------------------

Presentation presentation_report(const Graph& g) {
  Presentation p;
  for (const auto& l : g.labels()) p.generators.push_back(l + "*");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& s = g.label(v);
    p.star_relations.push_back({s + "*^2 - 1", {v}});
    p.bar_relations.push_back({s + "bar*(" + s + "bar + 2)", {v}});
  }
  for (auto [u, v] : g.non_edges()) {
    const auto& s = g.label(u);
    const auto& t = g.label(v);
    p.star_relations.push_back({s + "*" + t + "* - " + s + "* - " + t + "* + 1", {u, v}});
    p.bar_relations.push_back({s + "bar*" + t + "bar", {u, v}});
  }
  p.basis = enumerate_spherical(g);
  p.rank = p.basis.size();
  return p;
}

namespace {

std::vector<BigInt> bar_coordinates(const KRingElement& e, const std::vector<VertexMask>& order,
                                    const std::unordered_map<VertexMask, std::size_t>& position) {
  std::vector<BigInt> v(order.size());
  for (const auto& [k, c] : e.terms()) v[position.at(k)] = c;
  return v;
}

IdealLattice next_power(const GraphPtr& graph, std::size_t power, const std::vector<VertexMask>& order,
                        const IntMatrix& previous_basis) {
  std::unordered_map<VertexMask, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

  std::vector<std::vector<BigInt>> generators;
  for (std::size_t c = 0; c < previous_basis.cols(); ++c) {
    KRingElement b(graph, Basis::kBar);
    for (std::size_t r = 0; r < order.size(); ++r) b.add_term(order[r], previous_basis(r, c));
    for (std::size_t v = 0; v < graph->vertex_count(); ++v) {
      auto prod = multiply_bar(b, KRingElement::monomial(graph, Basis::kBar, bit(v)));
      generators.push_back(bar_coordinates(prod, order, position));
    }
  }
  IdealLattice out;
  out.graph = graph;
  out.power = power;
  out.coordinates = order;
  out.form = hermite_normal_form(IntMatrix::from_columns(order.size(), generators));
  return out;
}

std::vector<VertexMask> clique_order(const Graph& g) {
  std::vector<VertexMask> order;
  for (const auto& c : enumerate_spherical(g)) order.push_back(c.mask);
  return order;
}

}  // namespace

std::vector<IdealLattice> ideal_powers(const GraphPtr& graph, std::size_t max_power) {
  const auto order = clique_order(*graph);
  std::vector<IdealLattice> out;
  IntMatrix current = IntMatrix::identity(order.size());  // I^0 = R
  for (std::size_t k = 1; k <= max_power; ++k) {
    out.push_back(next_power(graph, k, order, current));
    current = out.back().form.basis;
  }
  return out;
}

IdealLattice ideal_power(const GraphPtr& graph, std::size_t k) {
  if (k == 0) throw AlgebraError("ideal_power: k must be at least 1");
  return std::move(ideal_powers(graph, k).back());
}

BigInt lattice_index(const IdealLattice& outer, const IdealLattice& inner) {
  if (outer.form.rank() != inner.form.rank() || !lattice_contains(outer.form, inner.form)) return 0;
  // For nested lattices of equal rank r, the index is the ratio of the r-dimensional
  // covolumes; both bases are in HNF with identical pivot rows, so it is the pivot ratio.
  if (outer.form.pivot_rows != inner.form.pivot_rows) return 0;
  return inner.form.pivot_product() / outer.form.pivot_product();
}

}  // namespace racgk
