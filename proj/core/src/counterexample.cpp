#include "racgk/counterexample.hpp"

#include <numeric>
#include <sstream>

#include "racgk/error.hpp"

namespace racgk {

std::size_t CharacterTable::order() const {
  return std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
}

bool CharacterTable::orthogonal() const {
  if (class_sizes.size() != class_names.size() || endomorphism_rank.size() != characters.size()) return false;
  const BigInt g(static_cast<unsigned long>(order()));
  for (std::size_t i = 0; i < rank(); ++i) {
    if (characters[i].size() != class_sizes.size()) return false;
    for (std::size_t j = 0; j < rank(); ++j) {
      BigInt s = 0;
      for (std::size_t c = 0; c < class_sizes.size(); ++c)
        s += static_cast<unsigned long>(class_sizes[c]) * characters[i][c] * characters[j][c];
      const BigInt expected = i == j ? BigInt(g * static_cast<unsigned long>(endomorphism_rank[i])) : BigInt(0);
      if (s != expected) return false;
    }
  }
  return true;
}

namespace {

CharacterTable checked(CharacterTable t) {
  if (!t.orthogonal()) throw AlgebraError("character table of " + t.group_name + " fails orthogonality");
  return t;
}

std::vector<BigInt> row(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

CharacterTable trivial_group_table() {
  CharacterTable t;
  t.group_name = "1";
  t.class_names = {"e"};
  t.class_sizes = {1};
  t.irreducible_names = {"tr"};
  t.characters = {row({1})};
  t.endomorphism_rank = {1};
  t.class_of = {{"e", 0}};
  return checked(std::move(t));
}

CharacterTable c2_table() {
  CharacterTable t;
  t.group_name = "C2";
  t.class_names = {"e", "g"};
  t.class_sizes = {1, 1};
  t.irreducible_names = {"tr", "lambda"};
  t.characters = {row({1, 1}), row({1, -1})};
  t.endomorphism_rank = {1, 1};
  t.class_of = {{"e", 0}, {"g", 1}};
  return checked(std::move(t));
}

CharacterTable c4_real_table() {
  CharacterTable t;
  t.group_name = "C4 (real)";
  t.class_names = {"e", "sigma", "sigma^2", "sigma^3"};
  t.class_sizes = {1, 1, 1, 1};
  t.irreducible_names = {"tr", "sign", "rotation"};
  t.characters = {row({1, 1, 1, 1}), row({1, -1, 1, -1}), row({2, 0, -2, 0})};
  // The rotation representation has commuting algebra C.
  t.endomorphism_rank = {1, 1, 2};
  t.class_of = {{"e", 0}, {"sigma", 1}, {"sigma^2", 2}, {"sigma^3", 3}};
  return checked(std::move(t));
}

CharacterTable d8_complex_table() {
  CharacterTable t;
  t.group_name = "D8";
  t.class_names = {"e", "sigma^2", "sigma", "epsilon", "epsilon*sigma"};
  t.class_sizes = {1, 1, 2, 2, 2};
  t.irreducible_names = {"tr", "chi_epsilon", "chi_sigma", "chi_sigma_epsilon", "tau"};
  t.characters = {row({1, 1, 1, 1, 1}), row({1, 1, 1, -1, -1}), row({1, 1, -1, 1, -1}),
                  row({1, 1, -1, -1, 1}), row({2, -2, 0, 0, 0})};
  t.endomorphism_rank = {1, 1, 1, 1, 1};
  t.class_of = {{"e", 0},       {"sigma^2", 1},         {"sigma", 2},          {"sigma^3", 2},
                {"epsilon", 3}, {"epsilon*sigma^2", 3}, {"epsilon*sigma", 4}, {"epsilon*sigma^3", 4}};
  return checked(std::move(t));
}

ImageLattice restriction_image(const CharacterTable& source, const CharacterTable& target,
                               std::span<const std::size_t> class_map) {
  if (class_map.size() != target.class_names.size())
    throw AlgebraError("restriction_image: class map must cover every target class");
  for (auto c : class_map)
    if (c >= source.class_names.size()) throw AlgebraError("restriction_image: class map out of range");

  const BigInt h(static_cast<unsigned long>(target.order()));
  std::vector<std::vector<BigInt>> columns;
  for (std::size_t i = 0; i < source.rank(); ++i) {
    std::vector<BigInt> coeffs(target.rank());
    for (std::size_t j = 0; j < target.rank(); ++j) {
      BigInt inner = 0;
      for (std::size_t c = 0; c < class_map.size(); ++c)
        inner += static_cast<unsigned long>(target.class_sizes[c]) * source.characters[i][class_map[c]] *
                 target.characters[j][c];
      const BigInt norm = h * static_cast<unsigned long>(target.endomorphism_rank[j]);
      if (!mpz_divisible_p(inner.get_mpz_t(), norm.get_mpz_t()))
        throw AlgebraError("restriction_image: restriction of " + source.irreducible_names[i] +
                           " does not decompose integrally over " + target.group_name);
      coeffs[j] = inner / norm;
    }
    columns.push_back(std::move(coeffs));
  }
  ImageLattice out;
  out.target_rank = target.rank();
  out.restricted = IntMatrix::from_columns(target.rank(), columns);
  out.form = hermite_normal_form(out.restricted);
  return out;
}

Membership membership(const ImageLattice& lattice, std::span<const BigInt> v) {
  return lattice_membership(lattice.form, v);
}

std::vector<std::pair<long, bool>> parity_sweep(const ImageLattice& lattice, std::span<const BigInt> direction,
                                                long k_min, long k_max) {
  std::vector<std::pair<long, bool>> out;
  for (long k = k_min; k <= k_max; ++k) {
    std::vector<BigInt> v;
    for (const auto& d : direction) v.push_back(d * k);
    out.emplace_back(k, membership(lattice, v).member);
  }
  return out;
}

// ---------------------------------------------------------------------------

GaussianMatrix::GaussianMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows)
    : n_(rows.size()), a_() {
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("GaussianMatrix: not square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

GaussianMatrix GaussianMatrix::identity(std::size_t n) {
  GaussianMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i).re = 1;
  return m;
}

GaussianMatrix GaussianMatrix::adjoint() const {
  GaussianMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

GaussianMatrix GaussianMatrix::negated() const {
  GaussianMatrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = {-a_[i].re, -a_[i].im};
  return m;
}

GaussianMatrix GaussianMatrix::power(unsigned k) const {
  GaussianMatrix out = identity(n_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

GaussianInt GaussianMatrix::trace() const {
  GaussianInt t;
  for (std::size_t i = 0; i < n_; ++i) t = t + (*this)(i, i);
  return t;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("GaussianMatrix: size mismatch");
  GaussianMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      for (std::size_t j = 0; j < a.n_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
  return m;
}

GaussianMatrix tau_sigma() { return GaussianMatrix{{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}}; }
GaussianMatrix tau_epsilon() { return GaussianMatrix{{{-1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}; }

namespace {
std::string describe(const GaussianInt& z) {
  std::ostringstream os;
  os << z.re << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i";
  return os.str();
}
}  // namespace

std::vector<IdentityCheck> verify_tau() {
  const auto s = tau_sigma();
  const auto e = tau_epsilon();
  const auto id = GaussianMatrix::identity(2);
  std::vector<IdentityCheck> out;

  out.push_back({"tau(sigma)^4 = I", s.power(4) == id, ""});
  out.push_back({"tau(epsilon)^2 = I", e.power(2) == id, ""});
  {
    const auto conj = e * s * e;
    const auto inverse = s.power(3);
    const bool ok = conj == inverse && s * inverse == id;
    out.push_back({"tau(epsilon) tau(sigma) tau(epsilon) = tau(sigma)^-1", ok, "inverse taken as tau(sigma)^3"});
  }
  {
    const auto sq = s.power(2);
    const auto tr = sq.trace();
    const bool ok = sq == id.negated() && tr == GaussianInt{-2, 0};
    out.push_back({"tau(sigma^2) = -I", ok, "trace " + describe(tr) + " = 2*lambda(sigma^2)"});
  }
  out.push_back({"tau unitary", s * s.adjoint() == id && e * e.adjoint() == id, ""});
  {
    // Trace character on the D8 classes e, sigma^2, sigma, epsilon, epsilon*sigma.
    const auto table = d8_complex_table();
    const std::vector<GaussianMatrix> reps = {id, s.power(2), s, e, e * s};
    bool ok = true;
    std::string values;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const auto t = reps[c].trace();
      values += (c ? "," : "") + describe(t);
      ok = ok && sgn(t.im) == 0 && t.re == table.characters[4][c];
    }
    out.push_back({"trace of tau matches the 2-dimensional D8 character", ok, values});
  }
  return out;
}

}  // namespace racgk
