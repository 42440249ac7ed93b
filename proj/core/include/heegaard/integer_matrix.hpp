#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace heegaard {

using Int = std::int64_t;

// All arithmetic below is exact; anything that leaves int64 throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Int> column(std::size_t c) const;

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> operator*(std::span<const Int> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Int determinant(const IntMatrix& m);

/// left * m * right = diag(diagonal), left and right unimodular, diagonal
/// non-negative with each entry dividing the next (zeros last).
struct SmithForm {
  std::vector<Int> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace heegaard
