#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "racgk/int_matrix.hpp"

namespace racgk {

/// Column Hermite normal form of the lattice spanned by the columns of a matrix.
///
/// With A the input (m x n), `transform` is a unimodular n x n matrix U such that
/// A·U = [basis | 0]. `basis` has `rank` columns in lower echelon form: column j has
/// its first nonzero entry at row `pivot_rows[j]`, the pivot is positive, pivot rows
/// strictly increase, and every entry to the left of a pivot lies in [0, pivot).
/// The trailing n - rank columns of U are a basis of the integer kernel of A.
struct HermiteForm {
  IntMatrix basis;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
  std::size_t ambient_dimension() const { return basis.rows(); }

  // Columns of the transform spanning ker A.
  IntMatrix kernel_basis() const;
  // Product of the pivots: the index of the lattice in its saturation when it has full rank.
  BigInt pivot_product() const;
};

HermiteForm hermite_normal_form(const IntMatrix& generators);

/// Outcome of a lattice membership query against a HermiteForm.
struct Membership {
  bool member = false;
  // Coordinates of the vector with respect to the HNF basis columns (when member).
  std::vector<BigInt> coordinates;
  // Coefficients with respect to the original generator columns, i.e. U·(coords, 0).
  std::vector<BigInt> certificate;
  // Human-readable description of the first violated condition (when not member).
  std::string violation;
};

Membership lattice_membership(const HermiteForm& lattice, std::span<const BigInt> v);

// True when every column of `sub` lies in the lattice.
bool lattice_contains(const HermiteForm& lattice, const HermiteForm& sub);

}  // namespace racgk
