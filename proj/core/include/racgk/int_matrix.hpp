#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace racgk {

using BigInt = mpz_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> column(std::size_t c) const;
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  // Keeps the columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;

  IntMatrix transposed() const;
  bool is_zero() const;

  // Elementary operations; all unimodular except scale by -1 which is its own inverse.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<BigInt> operator*(const IntMatrix& a, std::span<const BigInt> v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Kronecker product a ⊗ b.
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

  // Plain-text sparse dump: a "rows cols" header line, then one "row col value" line per nonzero.
  void write_triplets(std::ostream& os) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace racgk
