#include "burniat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace burniat {

Covector::Covector(std::vector<Int> numerators, Int denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ != 1 && denominator_ != 2)
    throw std::invalid_argument("covector denominator must be 1 or 2");
  if (denominator_ == 2 &&
      std::all_of(numerators_.begin(), numerators_.end(), [](Int x) { return x % 2 == 0; })) {
    for (Int& x : numerators_) x /= 2;
    denominator_ = 1;
  }
}

Int Covector::pair_numerator(const LatticeVector& v) const { return dot(numerators_, v.span()); }

Int Covector::pair(const LatticeVector& v) const {
  Int n = pair_numerator(v);
  if (n % denominator_ != 0)
    throw LatticeError(LatticeError::Kind::NotIntegral,
                       "pairing of " + to_string() + " with " + v.to_string() + " is not integral");
  return n / denominator_;
}

std::string Covector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i) os << ',';
    os << numerators_[i];
    if (denominator_ != 1 && numerators_[i] != 0) os << '/' << denominator_;
  }
  os << ')';
  return os.str();
}

namespace {

struct Pivot {
  std::size_t row, col;
};

// Smallest nonzero |entry| in rows [r0, rows) x cols [c0, cols).
std::optional<Pivot> min_entry(const IntMatrix& d, std::size_t r0, std::size_t c0) {
  std::optional<Pivot> best;
  Int best_abs = 0;
  for (std::size_t i = r0; i < d.rows(); ++i)
    for (std::size_t j = c0; j < d.cols(); ++j) {
      Int a = d(i, j) < 0 ? checked::neg(d(i, j)) : d(i, j);
      if (a != 0 && (!best || a < best_abs)) {
        best = Pivot{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto p = min_entry(d, t, t);
    if (!p) break;
    d.swap_rows(t, p->row);
    u.swap_rows(t, p->row);
    d.swap_cols(t, p->col);
    v.swap_cols(t, p->col);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = checked::floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, checked::neg(q));
        u.add_row_multiple(i, t, checked::neg(q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = checked::floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, checked::neg(q));
        v.add_col_multiple(j, t, checked::neg(q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row t / column t into the pivot.
        std::size_t best_r = t, best_c = t;
        Int best = d(t, t) < 0 ? -d(t, t) : d(t, t);
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          Int a = d(i, t) < 0 ? -d(i, t) : d(i, t);
          if (a != 0 && a < best) best = a, best_r = i, best_c = t;
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          Int a = d(t, j) < 0 ? -d(t, j) : d(t, j);
          if (a != 0 && a < best) best = a, best_r = t, best_c = j;
        }
        d.swap_rows(t, best_r);
        u.swap_rows(t, best_r);
        d.swap_cols(t, best_c);
        v.swap_cols(t, best_c);
        continue;
      }
      // Divisibility: every remaining entry must be a multiple of the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  SmithNormalForm snf{std::move(u), std::move(d), std::move(v), t, {}};
  for (std::size_t i = 0; i < snf.rank; ++i) snf.invariant_factors.push_back(snf.diagonal(i, i));
  return snf;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::size_t p = a.rows();
      Int best = 0;
      for (std::size_t i = r; i < a.rows(); ++i) {
        Int x = a(i, c) < 0 ? checked::neg(a(i, c)) : a(i, c);
        if (x != 0 && (p == a.rows() || x < best)) p = i, best = x;
      }
      if (p == a.rows()) break;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, r, checked::neg(checked::floor_div(a(i, c), a(r, c))));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      a.add_row_multiple(i, r, checked::neg(checked::floor_div(a(i, c), a(r, c))));
    ++r;
  }
  IntMatrix h(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = a(i, j);
  return h;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SmithNormalForm snf = smith_normal_form(m);
  IntMatrix k(m.cols() - snf.rank, m.cols());
  for (std::size_t j = snf.rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(j - snf.rank, i) = snf.right(i, j);
  return hermite_normal_form(k);
}

namespace {

std::vector<LatticeVector> rows_of(const IntMatrix& m) {
  std::vector<LatticeVector> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

Sublattice Sublattice::full(std::size_t ambient_rank) {
  return Sublattice(ambient_rank, rows_of(IntMatrix::identity(ambient_rank)));
}

Sublattice Sublattice::from_generators(std::size_t ambient_rank, std::span<const LatticeVector> generators) {
  for (const auto& g : generators)
    if (g.size() != ambient_rank)
      throw LatticeError(LatticeError::Kind::RankMismatch,
                         "generator " + g.to_string() + " does not live in Z^" + std::to_string(ambient_rank));
  IntMatrix m = IntMatrix::from_rows(generators, ambient_rank);
  return Sublattice(ambient_rank, rows_of(hermite_normal_form(m)));
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_rank_); }

std::optional<std::vector<Int>> Sublattice::try_coordinates(const LatticeVector& v) const {
  if (v.size() != ambient_rank_)
    throw LatticeError(LatticeError::Kind::RankMismatch,
                       "vector " + v.to_string() + " does not live in Z^" + std::to_string(ambient_rank_));
  LatticeVector residual = v;
  std::vector<Int> coords(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const LatticeVector& b = basis_[i];
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    for (std::size_t c = 0; c < pivot; ++c)
      if (residual[c] != 0) return std::nullopt;
    if (residual[pivot] % b[pivot] != 0) return std::nullopt;
    coords[i] = residual[pivot] / b[pivot];
    residual -= coords[i] * b;
  }
  if (!residual.is_zero()) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const LatticeVector& v) const { return try_coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& b) { return contains(b); });
}

std::vector<Int> Sublattice::coordinates(const LatticeVector& v) const {
  auto c = try_coordinates(v);
  if (!c) throw LatticeError(LatticeError::Kind::NotMember, v.to_string() + " is not in " + to_string());
  return *c;
}

LatticeVector Sublattice::from_coordinates(std::span<const Int> coords) const {
  if (coords.size() != basis_.size())
    throw LatticeError(LatticeError::Kind::RankMismatch, "coordinate tuple has the wrong length");
  LatticeVector v(ambient_rank_);
  for (std::size_t i = 0; i < coords.size(); ++i) v += coords[i] * basis_[i];
  return v;
}

bool Sublattice::in_rational_span(const LatticeVector& v) const {
  std::vector<LatticeVector> rows = basis_;
  rows.push_back(v);
  return burniat::rank(IntMatrix::from_rows(rows, ambient_rank_)) == basis_.size();
}

Int Sublattice::index() const {
  if (basis_.size() != ambient_rank_)
    throw LatticeError(LatticeError::Kind::RankMismatch, "index requested for a lattice of lower rank");
  Int d = determinant(basis_matrix());
  return d < 0 ? checked::neg(d) : d;
}

bool Sublattice::is_saturated_in(const Sublattice& ambient) const {
  if (!ambient.contains(*this)) return false;
  if (basis_.empty()) return true;
  IntMatrix k(basis_.size(), ambient.rank());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto c = ambient.coordinates(basis_[i]);
    for (std::size_t j = 0; j < c.size(); ++j) k(i, j) = c[j];
  }
  auto snf = smith_normal_form(k);
  return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(), [](Int d) { return d == 1; });
}

Sublattice Sublattice::image_under(const IntMatrix& m) const {
  std::vector<LatticeVector> imgs;
  imgs.reserve(basis_.size());
  for (const auto& b : basis_) imgs.push_back(m * b);
  return from_generators(m.rows(), imgs);
}

std::string Sublattice::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << basis_[i];
  }
  os << "> in Z^" << ambient_rank_;
  return os.str();
}

Sublattice sublattice_from_congruences(std::size_t ambient_rank, std::span<const Congruence> congruences) {
  if (congruences.empty()) return Sublattice::full(ambient_rank);
  const std::size_t q = congruences.size();
  IntMatrix a(q, ambient_rank + q);
  for (std::size_t i = 0; i < q; ++i) {
    const auto& c = congruences[i];
    if (!c.covector.is_integral() || c.covector.size() != ambient_rank)
      throw std::invalid_argument("congruence covectors must be integral of the ambient rank");
    if (c.modulus < 2) throw std::invalid_argument("congruence modulus must be at least 2");
    for (std::size_t j = 0; j < ambient_rank; ++j) a(i, j) = c.covector.numerators()[j];
    a(i, ambient_rank + i) = c.modulus;
  }
  IntMatrix k = integer_kernel(a);
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    LatticeVector v(ambient_rank);
    for (std::size_t j = 0; j < ambient_rank; ++j) v[j] = k(i, j);
    gens.push_back(std::move(v));
  }
  Sublattice s = Sublattice::from_generators(ambient_rank, gens);
  s.congruences_.assign(congruences.begin(), congruences.end());
  return s;
}

Sublattice annihilator_sublattice(const Sublattice& ambient, std::span<const Covector> conditions) {
  if (conditions.empty()) return ambient;
  const auto& basis = ambient.basis();
  IntMatrix a(conditions.size(), basis.size());
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (conditions[i].size() != ambient.ambient_rank())
      throw LatticeError(LatticeError::Kind::RankMismatch, "condition " + conditions[i].to_string() +
                                                               " has the wrong length");
    for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = conditions[i].pair_numerator(basis[j]);
  }
  IntMatrix k = integer_kernel(a);
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    std::vector<Int> c(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) c[j] = k(i, j);
    gens.push_back(ambient.from_coordinates(c));
  }
  return Sublattice::from_generators(ambient.ambient_rank(), gens);
}

LatticeMap::LatticeMap(IntMatrix m, Sublattice dom, Sublattice cod)
    : matrix(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {
  if (matrix.cols() != domain.ambient_rank() || matrix.rows() != codomain.ambient_rank())
    throw LatticeError(LatticeError::Kind::RankMismatch, "map matrix does not match domain/codomain ranks");
  for (const auto& b : domain.basis())
    if (!codomain.contains(matrix * b))
      throw LatticeError(LatticeError::Kind::NotMember,
                         "image of " + b.to_string() + " leaves the codomain " + codomain.to_string());
}

ImageAndKernel image_and_kernel(const LatticeMap& f) {
  const auto& basis = f.domain.basis();
  std::vector<LatticeVector> images;
  for (const auto& b : basis) images.push_back(f(b));
  Sublattice image = Sublattice::from_generators(f.codomain.ambient_rank(), images);

  IntMatrix cols = IntMatrix::from_columns(images, f.codomain.ambient_rank());
  std::vector<LatticeVector> kernel_gens;
  if (!basis.empty()) {
    IntMatrix k = integer_kernel(cols);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      std::vector<Int> c(k.cols());
      for (std::size_t j = 0; j < k.cols(); ++j) c[j] = k(i, j);
      kernel_gens.push_back(f.domain.from_coordinates(c));
    }
  }
  return {std::move(image), Sublattice::from_generators(f.domain.ambient_rank(), kernel_gens)};
}

}  // namespace burniat
