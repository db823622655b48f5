#include "racgk/completion.hpp"

namespace racgk {

CompletedElement::CompletedElement(GraphPtr graph, unsigned precision)
    : graph_(std::move(graph)), precision_(precision) {
  if (!graph_) throw AlgebraError("CompletedElement requires a graph");
  if (precision_ == 0) throw AlgebraError("precision must be at least 1");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), 2, precision_);
}

BigInt CompletedElement::coefficient(VertexMask clique) const {
  if (clique == 0) return constant_;
  auto it = terms_.find(clique);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CompletedElement::add_term(VertexMask clique, const BigInt& coeff) {
  if (clique == 0) {
    constant_ += coeff;
    return;
  }
  if (!graph_->is_clique(clique)) throw AlgebraError("completed monomial is not a clique");
  BigInt r = coefficient(clique) + coeff;
  mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), precision_);
  if (sgn(r) == 0)
    terms_.erase(clique);
  else
    terms_[clique] = std::move(r);
}

bool operator==(const CompletedElement& a, const CompletedElement& b) {
  return a.precision_ == b.precision_ && same_graph(*a.graph_, *b.graph_) && a.constant_ == b.constant_ &&
         a.terms_ == b.terms_;
}

CompletedElement complete(const KRingElement& a, unsigned precision) {
  const KRingElement bar = convert_basis(a, Basis::kBar);
  CompletedElement out(a.graph_ptr(), precision);
  for (const auto& [k, c] : bar.terms()) out.add_term(k, c);
  return out;
}

CompletedElement completed_multiply(const CompletedElement& a, const CompletedElement& b) {
  if (!same_graph(a.graph(), b.graph())) throw AlgebraError("completed_multiply: graph mismatch");
  if (a.precision() != b.precision()) throw AlgebraError("completed_multiply: precision mismatch");
  const Graph& g = a.graph();
  CompletedElement out(a.graph_ptr(), a.precision());
  out.set_constant(a.constant() * b.constant());
  for (const auto& [k, c] : b.terms()) out.add_term(k, a.constant() * c);
  for (const auto& [k, c] : a.terms()) out.add_term(k, b.constant() * c);
  for (const auto& [ja, ca] : a.terms())
    for (const auto& [jb, cb] : b.terms()) {
      const VertexMask u = ja | jb;
      if (!g.is_clique(u)) continue;
      const std::size_t shared = popcount(ja & jb);
      // (−2)^shared vanishes mod 2^p once shared ≥ p.
      if (shared >= a.precision()) continue;
      BigInt c = ca * cb;
      mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), shared);
      if (shared % 2) c = -c;
      out.add_term(u, c);
    }
  return out;
}

}  // namespace racgk
