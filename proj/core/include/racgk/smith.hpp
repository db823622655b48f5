#pragma once

#include <vector>

#include "racgk/int_matrix.hpp"

namespace racgk {

/// Smith normal form U·M·V = D of an integer matrix.
///
/// `diagonal` holds the nonzero invariant factors d_1 | d_2 | ... (all positive);
/// its length is the rank. `left` (U) and `right` (V) are unimodular and are only
/// populated when transforms were requested.
struct SmithResult {
  std::vector<BigInt> diagonal;
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const { return diagonal.size(); }
};

enum class SmithTransforms { kNone, kCompute };

// Pivoting picks the entry of minimal absolute value in the active block.
SmithResult smith_normal_form(const IntMatrix& m,
                              SmithTransforms transforms = SmithTransforms::kCompute);

std::size_t integer_rank(const IntMatrix& m);

}  // namespace racgk
