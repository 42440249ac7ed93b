#include "heegaard/integer_matrix.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "heegaard/errors.hpp"

namespace heegaard {

__extension__ typedef __int128 Wide;

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul((*this)(r, k), rhs(k, c)));
      out(r, c) = acc;
    }
  }
  return out;
}

std::vector<Int> IntMatrix::operator*(std::span<const Int> v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) out[r] = checked_add(out[r], checked_mul((*this)(r, k), v[k]));
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_neg((*this)(r, c));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division is guaranteed by Sylvester's identity.
        const Wide num = static_cast<Wide>(m(i, j)) * m(k, k) - static_cast<Wide>(m(i, k)) * m(k, j);
        const Wide q = num / prev;
        if (q > std::numeric_limits<Int>::max() || q < std::numeric_limits<Int>::min()) {
          throw OverflowError("integer overflow in determinant");
        }
        m(i, j) = static_cast<Int>(q);
      }
    }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  IntMatrix d = input;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (d(r, c) == 0) continue;
          if (pr == rows || std::abs(d(r, c)) < std::abs(d(pr, pc))) pr = r, pc = c;
        }
      }
      if (pr == rows) break;
      d.swap_rows(t, pr), left.swap_rows(t, pr);
      d.swap_cols(t, pc), right.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Int q = floor_div(d(r, t), d(t, t));
        d.add_row_multiple(r, t, checked_neg(q));
        left.add_row_multiple(r, t, checked_neg(q));
        dirty = dirty || d(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Int q = floor_div(d(t, c), d(t, t));
        d.add_col_multiple(c, t, checked_neg(q));
        right.add_col_multiple(c, t, checked_neg(q));
        dirty = dirty || d(t, c) != 0;
      }
      if (dirty) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (d(r, c) % d(t, t) != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      left.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }
  SmithForm out;
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(d(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

}  // namespace heegaard
