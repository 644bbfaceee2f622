// Exact integer lattice algebra: Smith and Hermite normal forms, sublattices
// given by generators, congruences or annihilators, half-integral covectors,
// and lattice maps with their image and kernel.

#ifndef BURNIAT_LATTICE_HPP
#define BURNIAT_LATTICE_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "burniat/integer.hpp"

namespace burniat {

class LatticeError : public std::runtime_error {
 public:
  enum class Kind { NotMember, NotInvariant, Inconsistent, RankMismatch, NotIntegral };
  LatticeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An element of a dual lattice, numerators / denominator with denominator 1 or 2.
/// Stored reduced: the denominator is 2 only if some numerator is odd.
class Covector {
 public:
  Covector() = default;
  explicit Covector(std::vector<Int> numerators, Int denominator = 1);

  const std::vector<Int>& numerators() const { return numerators_; }
  Int denominator() const { return denominator_; }
  std::size_t size() const { return numerators_.size(); }
  bool is_integral() const { return denominator_ == 1; }

  // Exact pairing; throws LatticeError(NotIntegral) if the result is fractional.
  Int pair(const LatticeVector& v) const;
  // Pairing numerator, i.e. denominator * <m, v>.
  Int pair_numerator(const LatticeVector& v) const;

  friend bool operator==(const Covector&, const Covector&) = default;
  std::string to_string() const;

 private:
  std::vector<Int> numerators_;
  Int denominator_ = 1;
};

struct Congruence {
  Covector covector;  // integral
  Int modulus;        // >= 2
};

struct SmithNormalForm {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // d_1 | d_2 | ... (nonzero ones)
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// echelon rows with positive pivots and entries above each pivot reduced into
// [0, pivot). Zero rows are dropped. Equal row lattices give equal results.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Basis (as HNF rows) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// A subgroup of Z^n, stored with a canonical (Hermite) basis.
class Sublattice {
 public:
  static Sublattice full(std::size_t ambient_rank);
  static Sublattice from_generators(std::size_t ambient_rank, std::span<const LatticeVector> generators);
  static Sublattice from_generators(std::size_t ambient_rank, std::initializer_list<LatticeVector> generators) {
    std::vector<LatticeVector> g(generators);
    return from_generators(ambient_rank, std::span<const LatticeVector>(g));
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<LatticeVector>& basis() const { return basis_; }
  // Basis as matrix rows.
  IntMatrix basis_matrix() const;
  // Congruences this lattice was defined by, if any (informational).
  const std::vector<Congruence>& congruences() const { return congruences_; }

  bool contains(const LatticeVector& v) const;
  bool contains(const Sublattice& other) const;
  std::optional<std::vector<Int>> try_coordinates(const LatticeVector& v) const;
  // Throws LatticeError(NotMember).
  std::vector<Int> coordinates(const LatticeVector& v) const;
  LatticeVector from_coordinates(std::span<const Int> coords) const;

  bool in_rational_span(const LatticeVector& v) const;
  // Index in Z^n; requires full rank.
  Int index() const;
  // True when (this ⊗ Q) ∩ ambient == this.
  bool is_saturated_in(const Sublattice& ambient) const;
  // Image of this lattice under an integer matrix acting on Z^n.
  Sublattice image_under(const IntMatrix& m) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

 private:
  friend Sublattice sublattice_from_congruences(std::size_t, std::span<const Congruence>);
  Sublattice(std::size_t ambient_rank, std::vector<LatticeVector> basis)
      : ambient_rank_(ambient_rank), basis_(std::move(basis)) {}

  std::size_t ambient_rank_ = 0;
  std::vector<LatticeVector> basis_;
  std::vector<Congruence> congruences_;
};

Sublattice sublattice_from_congruences(std::size_t ambient_rank, std::span<const Congruence> congruences);
inline Sublattice sublattice_from_congruences(std::size_t ambient_rank, std::initializer_list<Congruence> c) {
  std::vector<Congruence> v(c);
  return sublattice_from_congruences(ambient_rank, std::span<const Congruence>(v));
}

// {v in ambient : <m, v> = 0 for every m}. Saturated in `ambient`.
Sublattice annihilator_sublattice(const Sublattice& ambient, std::span<const Covector> conditions);

inline bool membership(const Sublattice& sub, const LatticeVector& v) { return sub.contains(v); }
inline std::vector<Int> coordinates_in_basis(const Sublattice& sub, const LatticeVector& v) {
  return sub.coordinates(v);
}

/// A homomorphism between sublattices given by a matrix on ambient coordinates.
struct LatticeMap {
  IntMatrix matrix;  // codomain ambient rank x domain ambient rank
  Sublattice domain;
  Sublattice codomain;

  LatticeMap(IntMatrix m, Sublattice dom, Sublattice cod);
  LatticeVector operator()(const LatticeVector& v) const { return matrix * v; }
};

struct ImageAndKernel {
  Sublattice image;
  Sublattice kernel;
};

ImageAndKernel image_and_kernel(const LatticeMap& f);

}  // namespace burniat

#endif  // BURNIAT_LATTICE_HPP
