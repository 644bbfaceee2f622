#include "burniat/integer.hpp"

#include <algorithm>
#include <sstream>

namespace burniat {

namespace checked {

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == INT64_MIN && b == -1) throw std::overflow_error("integer overflow in division");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int b) {
  Int q = floor_div(a, b);
  Int r = sub(a, mul(q, b));
  if (r < 0) r = add(r, b < 0 ? neg(b) : b);
  return r;
}

}  // namespace checked

Int gcd(Int a, Int b) {
  if (a == INT64_MIN || b == INT64_MIN) throw std::overflow_error("gcd of INT64_MIN");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

Int LatticeVector::content() const {
  Int g = 0;
  for (Int x : coords_) g = gcd(g, x);
  return g;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (Int& x : r.coords_) x = checked::neg(x);
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator*=(Int s) {
  for (Int& x : coords_) x = checked::mul(x, s);
  return *this;
}

LatticeVector LatticeVector::divided_exactly(Int d) const {
  if (d == 0) throw std::domain_error("division by zero");
  LatticeVector r(*this);
  for (Int& x : r.coords_) {
    if (x % d != 0) throw std::domain_error("vector " + to_string() + " not divisible by " + std::to_string(d));
    x /= d;
  }
  return r;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::fma(s, a[i], b[i]);
  return s;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> cols, std::size_t rows) {
  return from_rows(cols, rows).transposed();
}

LatticeVector IntMatrix::row(std::size_t r) const {
  return LatticeVector(std::vector<Int>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

LatticeVector IntMatrix::column(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) = checked::fma((*this)(dst, c), k, (*this)(src, c));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) = checked::fma((*this)(r, dst), k, (*this)(r, src));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked::neg((*this)(r, c));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = checked::fma(p(i, j), aik, b(k, j));
    }
  return p;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  LatticeVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) r[i] = checked::fma(r[i], a(i, k), v[k]);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << row(r).to_string();
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : checked::neg(cof);
    }
  return adj;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int g = gcd(a(r, c), a(i, c));
      Int fr = a(i, c) / g;
      Int fi = a(r, c) / g;
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) = checked::sub(checked::mul(a(i, j), fi), checked::mul(a(r, j), fr));
      Int cont = 0;
      for (std::size_t j = c; j < a.cols(); ++j) cont = gcd(cont, a(i, j));
      if (cont > 1)
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) /= cont;
    }
    ++r;
  }
  return r;
}

}  // namespace burniat
