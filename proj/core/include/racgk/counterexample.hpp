#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "racgk/hermite.hpp"
#include "racgk/int_matrix.hpp"

namespace racgk {

/// Integer-valued character table of a small finite group.
///
/// For real representation rings an irreducible of complex type has
/// ⟨χ, χ⟩ = 2, recorded in `endomorphism_rank`; complex tables use 1 throughout.
struct CharacterTable {
  std::string group_name;
  std::vector<std::string> class_names;
  std::vector<std::size_t> class_sizes;
  std::vector<std::string> irreducible_names;
  std::vector<std::vector<BigInt>> characters;  // characters[i][class]
  std::vector<std::size_t> endomorphism_rank;
  std::map<std::string, std::size_t> class_of;  // named group elements → class

  std::size_t order() const;
  std::size_t rank() const { return characters.size(); }
  // Σ_c |c|·χ_i(c)·χ_j(c) = |G|·e_i·δ_ij, checked exactly.
  bool orthogonal() const;
};

// Static tables; each factory throws AlgebraError if orthogonality fails.
CharacterTable trivial_group_table();
CharacterTable c2_table();         // complex; also the real table of C₂
CharacterTable c4_real_table();    // tr, sign, 2-dim rotation
CharacterTable d8_complex_table(); // F = C₄ ⋊ C₂ = ⟨σ, ε⟩

/// Image of res: R(source) → R(target) in the target's irreducible basis.
struct ImageLattice {
  std::size_t target_rank = 0;
  IntMatrix restricted;  // column i: decomposition of res(χ_i)
  HermiteForm form;

  const IntMatrix& hnf_basis() const { return form.basis; }
};

// class_map[c] is the source class containing the target's class-c elements.
ImageLattice restriction_image(const CharacterTable& source, const CharacterTable& target,
                               std::span<const std::size_t> class_map);

// Certificate coefficients refer to the source irreducibles.
Membership membership(const ImageLattice& lattice, std::span<const BigInt> v);

std::vector<std::pair<long, bool>> parity_sweep(const ImageLattice& lattice, std::span<const BigInt> direction,
                                                long k_min, long k_max);

struct GaussianInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussianInt conj() const { return {re, -im}; }
  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

class GaussianMatrix {
 public:
  explicit GaussianMatrix(std::size_t n) : n_(n), a_(n * n) {}
  GaussianMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows);
  static GaussianMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  GaussianInt& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  GaussianMatrix adjoint() const;
  GaussianMatrix negated() const;
  GaussianMatrix power(unsigned k) const;
  GaussianInt trace() const;

  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<GaussianInt> a_;
};

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// τ(σ) = [[0, i], [i, 0]], τ(ε) = [[−1, 0], [0, 1]].
GaussianMatrix tau_sigma();
GaussianMatrix tau_epsilon();

// σ⁴ = 1, ε² = 1, εσε = σ⁻¹, σ² ↦ −I; then unitarity and agreement of the trace
// character with the 2-dimensional row of the D₈ table.
std::vector<IdentityCheck> verify_tau();

}  // namespace racgk
