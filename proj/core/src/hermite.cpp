#include "racgk/hermite.hpp"

#include <sstream>
#include <stdexcept>

namespace racgk {
namespace {

// Replaces columns (p, q) by (x·p + y·q, -(b/g)·p + (a/g)·q), where a, b are the
// row entries of p and q and g = x·a + y·b = gcd(a, b). Determinant is one.
void combine_columns(IntMatrix& m, std::size_t p, std::size_t q, const BigInt& x, const BigInt& y,
                     const BigInt& bg, const BigInt& ag) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const BigInt vp = m(r, p);
    const BigInt vq = m(r, q);
    if (sgn(vp) == 0 && sgn(vq) == 0) continue;
    m(r, p) = x * vp + y * vq;
    m(r, q) = ag * vq - bg * vp;
  }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(n);
  HermiteForm form;

  std::size_t col = 0;
  for (std::size_t r = 0; r < a.rows() && col < n; ++r) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (sgn(a(r, j)) == 0) continue;
      const BigInt av = a(r, col);
      const BigInt bv = a(r, j);
      if (sgn(av) != 0 && mpz_divisible_p(bv.get_mpz_t(), av.get_mpz_t())) {
        BigInt q = bv / av;
        a.add_col_multiple(j, col, -q);
        u.add_col_multiple(j, col, -q);
        continue;
      }
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
      const BigInt bg = bv / g;
      const BigInt ag = av / g;
      combine_columns(a, col, j, x, y, bg, ag);
      combine_columns(u, col, j, x, y, bg, ag);
    }
    if (sgn(a(r, col)) == 0) continue;
    if (sgn(a(r, col)) < 0) {
      a.negate_col(col);
      u.negate_col(col);
    }
    for (std::size_t j = 0; j < col; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, j).get_mpz_t(), a(r, col).get_mpz_t());
      if (sgn(q) == 0) continue;
      a.add_col_multiple(j, col, -q);
      u.add_col_multiple(j, col, -q);
    }
    form.pivot_rows.push_back(r);
    ++col;
  }

  form.basis = a.column_block(0, col);
  form.transform = std::move(u);
  return form;
}

IntMatrix HermiteForm::kernel_basis() const {
  return transform.column_block(rank(), transform.cols() - rank());
}

BigInt HermiteForm::pivot_product() const {
  BigInt p = 1;
  for (std::size_t j = 0; j < rank(); ++j) p *= basis(pivot_rows[j], j);
  return p;
}

Membership lattice_membership(const HermiteForm& lattice, std::span<const BigInt> v) {
  if (v.size() != lattice.ambient_dimension())
    throw std::invalid_argument("lattice_membership: vector has length " + std::to_string(v.size()) +
                                ", lattice lives in dimension " +
                                std::to_string(lattice.ambient_dimension()));
  Membership out;
  std::vector<BigInt> rest(v.begin(), v.end());
  std::vector<BigInt> coords(lattice.rank());
  std::size_t row = 0;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    const std::size_t p = lattice.pivot_rows[j];
    for (; row < p; ++row) {
      if (sgn(rest[row]) != 0) {
        std::ostringstream os;
        os << "row " << row << " has residual " << rest[row] << " outside the span";
        out.violation = os.str();
        return out;
      }
    }
    const BigInt& pivot = lattice.basis(p, j);
    if (!mpz_divisible_p(rest[p].get_mpz_t(), pivot.get_mpz_t())) {
      std::ostringstream os;
      os << "row " << p << ": residual " << rest[p] << " is not congruent to 0 mod " << pivot;
      out.violation = os.str();
      return out;
    }
    coords[j] = rest[p] / pivot;
    for (std::size_t r = p; r < rest.size(); ++r) rest[r] -= coords[j] * lattice.basis(r, j);
    row = p + 1;
  }
  for (; row < rest.size(); ++row) {
    if (sgn(rest[row]) != 0) {
      std::ostringstream os;
      os << "row " << row << " has residual " << rest[row] << " outside the span";
      out.violation = os.str();
      return out;
    }
  }
  out.member = true;
  out.certificate.assign(lattice.transform.rows(), BigInt(0));
  for (std::size_t i = 0; i < lattice.transform.rows(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j)
      if (sgn(coords[j]) != 0) out.certificate[i] += lattice.transform(i, j) * coords[j];
  out.coordinates = std::move(coords);
  return out;
}

bool lattice_contains(const HermiteForm& lattice, const HermiteForm& sub) {
  for (std::size_t c = 0; c < sub.basis.cols(); ++c) {
    auto col = sub.basis.column(c);
    if (!lattice_membership(lattice, col).member) return false;
  }
  return true;
}

}  // namespace racgk
