// Checked 64-bit integer arithmetic, integer vectors and small dense matrices.
//
// Every operation that could wrap throws std::overflow_error instead. The
// lattices handled here have rank at most 8 and tiny entries, so 64 bits are
// plenty; the checks exist so that a bug surfaces as an error, not a wrong
// answer.

#ifndef BURNIAT_INTEGER_HPP
#define BURNIAT_INTEGER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace burniat {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a + b * c
inline Int fma(Int a, Int b, Int c) { return add(a, mul(b, c)); }

// Floor division and remainder with a remainder in [0, |b|).
Int floor_div(Int a, Int b);
Int mod(Int a, Int b);

}  // namespace checked

Int gcd(Int a, Int b);

/// An integer tuple interpreted in some ambient lattice Z^n.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }
  std::span<const Int> span() const { return coords_; }

  bool is_zero() const;
  // gcd of the coordinates; 0 for the zero vector.
  Int content() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(Int s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Int s, LatticeVector a) { return a *= s; }
  // Exact division; throws std::domain_error if some coordinate is not divisible.
  LatticeVector divided_exactly(Int d) const;

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  std::string to_string() const;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

Int dot(std::span<const Int> a, std::span<const Int> b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const LatticeVector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);
// Adjugate of a square matrix: adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);
// Rank over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace burniat

#endif  // BURNIAT_INTEGER_HPP
