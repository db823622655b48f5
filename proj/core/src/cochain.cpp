#include "racgk/cochain.hpp"

#include <stdexcept>
#include <string>

#include "racgk/smith.hpp"

namespace racgk {

void CochainComplex::validate() const {
  if (ranks.empty()) {
    if (!differentials.empty()) throw std::invalid_argument("cochain complex: differentials without degrees");
    return;
  }
  if (differentials.size() + 1 != ranks.size())
    throw std::invalid_argument("cochain complex: expected " + std::to_string(ranks.size() - 1) + " differentials");
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (d.cols() != ranks[k] || d.rows() != ranks[k + 1])
      throw std::invalid_argument("cochain complex: d^" + std::to_string(k) + " has shape " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                                  std::to_string(ranks[k + 1]) + "x" + std::to_string(ranks[k]));
  }
}

bool CochainComplex::squares_to_zero() const {
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k)
    if (!(differentials[k + 1] * differentials[k]).is_zero()) return false;
  return true;
}

CohomologyResult cohomology(const CochainComplex& c) {
  c.validate();
  std::vector<std::vector<BigInt>> factors;
  factors.reserve(c.differentials.size());
  for (const auto& d : c.differentials) factors.push_back(smith_normal_form(d, SmithTransforms::kNone).diagonal);

  CohomologyResult out;
  for (std::size_t k = 0; k < c.ranks.size(); ++k) {
    const std::size_t out_rank = k < factors.size() ? factors[k].size() : 0;
    const std::size_t in_rank = k > 0 ? factors[k - 1].size() : 0;
    DegreeCohomology h;
    h.degree = k;
    h.free_rank = c.ranks[k] - out_rank - in_rank;
    if (k > 0)
      for (const auto& f : factors[k - 1])
        if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

CochainComplex tensor_product(const CochainComplex& c, const CochainComplex& d) {
  c.validate();
  d.validate();
  CochainComplex out;
  if (c.ranks.empty() || d.ranks.empty()) return out;
  const std::size_t top = (c.degrees() - 1) + (d.degrees() - 1);

  // offsets[k][i]: position of the C^i ⊗ D^{k-i} block inside (C⊗D)^k.
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  out.ranks.assign(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    offsets[k].assign(c.degrees(), 0);
    for (std::size_t i = 0; i < c.degrees(); ++i) {
      offsets[k][i] = out.ranks[k];
      if (k >= i && k - i < d.degrees()) out.ranks[k] += c.ranks[i] * d.ranks[k - i];
    }
  }

  auto place = [](IntMatrix& target, const IntMatrix& block, std::size_t row0, std::size_t col0, long sign) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t q = 0; q < block.cols(); ++q)
        if (sgn(block(r, q)) != 0) target(row0 + r, col0 + q) += sign * block(r, q);
  };

  for (std::size_t k = 0; k < top; ++k) {
    IntMatrix dk(out.ranks[k + 1], out.ranks[k]);
    for (std::size_t i = 0; i < c.degrees(); ++i) {
      if (k < i || k - i >= d.degrees()) continue;
      const std::size_t j = k - i;
      // dx ⊗ y : C^i⊗D^j → C^{i+1}⊗D^j
      if (i + 1 < c.degrees())
        place(dk, IntMatrix::kronecker(c.differentials[i], IntMatrix::identity(d.ranks[j])),
              offsets[k + 1][i + 1], offsets[k][i], 1);
      // (−1)^i x ⊗ dy : C^i⊗D^j → C^i⊗D^{j+1}
      if (j + 1 < d.degrees())
        place(dk, IntMatrix::kronecker(IntMatrix::identity(c.ranks[i]), d.differentials[j]),
              offsets[k + 1][i], offsets[k][i], i % 2 ? -1 : 1);
    }
    out.differentials.push_back(std::move(dk));
  }
  return out;
}

}  // namespace racgk
