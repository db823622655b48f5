#include "racgk/rep_ring.hpp"

#include <string>

namespace racgk {

RepRingElement RepRingElement::monomial(VertexMask ambient, VertexMask support, const BigInt& coeff) {
  RepRingElement e(ambient);
  e.add_term(support, coeff);
  return e;
}

RepRingElement RepRingElement::constant(VertexMask ambient, const BigInt& value) {
  return monomial(ambient, 0, value);
}

BigInt RepRingElement::coefficient(VertexMask support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void RepRingElement::add_term(VertexMask support, const BigInt& coeff) {
  if ((support & ~ambient_) != 0) throw AlgebraError("monomial support is not a subset of the ambient group");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(support, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void RepRingElement::require_same_ambient(const RepRingElement& other) const {
  if (ambient_ != other.ambient_) throw AlgebraError("representation ring elements have different ambient groups");
}

RepRingElement& RepRingElement::operator+=(const RepRingElement& other) {
  require_same_ambient(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

RepRingElement& RepRingElement::operator-=(const RepRingElement& other) {
  require_same_ambient(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

RepRingElement& RepRingElement::operator*=(const BigInt& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

RepRingElement rep_multiply(const RepRingElement& a, const RepRingElement& b) {
  if (a.ambient() != b.ambient()) throw AlgebraError("rep_multiply: ambient mismatch");
  RepRingElement out(a.ambient());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka ^ kb, ca * cb);
  return out;
}

RepRingElement restriction(const RepRingElement& a, VertexMask target) {
  if ((target & ~a.ambient()) != 0) throw AlgebraError("restriction: target is not a subgroup of the ambient");
  RepRingElement out(target);
  for (const auto& [k, c] : a.terms()) out.add_term(k & target, c);
  return out;
}

IntMatrix restriction_matrix(VertexMask source, VertexMask target) {
  if ((target & ~source) != 0) throw AlgebraError("restriction_matrix: target is not a subset of source");
  if (popcount(source) > kMaxCharacterRank) throw AlgebraError("restriction_matrix: source too large");
  const std::uint64_t cols = std::uint64_t{1} << popcount(source);
  const std::uint64_t rows = std::uint64_t{1} << popcount(target);
  IntMatrix m(rows, cols);
  for (std::uint64_t c = 0; c < cols; ++c) {
    const VertexMask k = deposit_bits(c, source);
    m(extract_bits(k & target, target), c) = 1;
  }
  return m;
}

namespace {

// In-place Walsh–Hadamard transform: v[i] ← Σ_k v[k]·(−1)^{|k ∧ i|}.
void walsh_hadamard(std::vector<BigInt>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        BigInt x = v[j];
        v[j] += v[j + h];
        v[j + h] = x - v[j + h];
      }
}

std::size_t checked_rank(VertexMask ambient) {
  const std::size_t n = popcount(ambient);
  if (n > kMaxCharacterRank)
    throw AlgebraError("character transform limited to " + std::to_string(kMaxCharacterRank) + " generators");
  return n;
}

}  // namespace

std::vector<BigInt> character_evaluation(const RepRingElement& a) {
  const std::size_t n = checked_rank(a.ambient());
  std::vector<BigInt> v(std::size_t{1} << n);
  for (const auto& [k, c] : a.terms()) v[extract_bits(k, a.ambient())] = c;
  walsh_hadamard(v);
  return v;
}

RepRingElement character_interpolation(VertexMask ambient, std::span<const BigInt> values) {
  const std::size_t n = checked_rank(ambient);
  if (values.size() != (std::size_t{1} << n))
    throw AlgebraError("character_interpolation: expected " + std::to_string(std::size_t{1} << n) +
                       " values, got " + std::to_string(values.size()));
  std::vector<BigInt> v(values.begin(), values.end());
  walsh_hadamard(v);
  RepRingElement out(ambient);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!mpz_divisible_2exp_p(v[i].get_mpz_t(), n))
      throw AlgebraError("character_interpolation: non-integral coefficient " + v[i].get_str() + "/" +
                         std::to_string(std::size_t{1} << n) + "; not a virtual character");
    BigInt q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), v[i].get_mpz_t(), n);
    out.add_term(deposit_bits(i, ambient), q);
  }
  return out;
}

}  // namespace racgk
