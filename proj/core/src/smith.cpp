#include "racgk/smith.hpp"

#include <optional>
#include <utility>

namespace racgk {
namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  SmithResult run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithResult result;
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = min_abs_in_block(t);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      reduce_pivot(t);
      if (sgn(a_(t, t)) < 0) negate_row(t);
      result.diagonal.push_back(a_(t, t));
    }
    if (track_) {
      result.left = std::move(u_);
      result.right = std::move(v_);
    }
    return result;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> min_abs_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& x = a_(i, j);
        if (sgn(x) == 0) continue;
        if (!best || cmpabs(x, best_abs) < 0) {
          best = {i, j};
          best_abs = abs(x);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    swap_rows(t, i);
    swap_cols(t, j);
  }

  // Clears row t and column t beyond the pivot and enforces divisibility of the
  // remaining block by the pivot.
  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (sgn(a_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (sgn(a_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        repivot_on_cross(t);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < a_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          const BigInt& x = a_(i, j);
          if (sgn(x) != 0 && !mpz_divisible_p(x.get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, BigInt(1));
            divisible = false;
            break;
          }
        }
      if (divisible) return;
    }
  }

  // Brings the smallest nonzero entry of row t / column t onto the diagonal.
  void repivot_on_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    BigInt best = abs(a_(t, t));
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), best) < 0) {
        best = abs(a_(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), best) < 0) {
        best = abs(a_(t, j));
        bi = t;
        bj = j;
      }
    move_to(t, bi, bj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (track_) u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b);
  }
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    a_.add_row_multiple(target, source, f);
    if (track_) u_.add_row_multiple(target, source, f);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    a_.add_col_multiple(target, source, f);
    if (track_) v_.add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t r) {
    a_.negate_row(r);
    if (track_) u_.negate_row(r);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, SmithTransforms transforms) {
  return SmithReducer(m, transforms == SmithTransforms::kCompute).run();
}

std::size_t integer_rank(const IntMatrix& m) {
  return smith_normal_form(m, SmithTransforms::kNone).rank();
}

}  // namespace racgk
