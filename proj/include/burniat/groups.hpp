// Relabeling groups: permutations of the twelve branch-curve labels
// R0..R3, G0..B3 together with the matrices they induce on N_Y and N_6.
//
// Permutations are stored as image arrays over the fixed label order
// R0,R1,R2,R3,G0,G1,G2,G3,B0,B1,B2,B3 and compose as functions:
// (g * h)(x) = g(h(x)).

#ifndef BURNIAT_GROUPS_HPP
#define BURNIAT_GROUPS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "burniat/lattice.hpp"

namespace burniat {

enum class Color : std::uint8_t { R = 0, G = 1, B = 2 };

struct CurveLabel {
  Color color;
  std::uint8_t index;  // 0..3; 0 and 3 are boundary curves, 1 and 2 interior

  static CurveLabel from_id(std::uint8_t id) { return {static_cast<Color>(id / 4), static_cast<std::uint8_t>(id % 4)}; }
  std::uint8_t id() const { return static_cast<std::uint8_t>(static_cast<int>(color) * 4 + index); }
  bool is_boundary() const { return index == 0 || index == 3; }
  std::string name() const;
  static CurveLabel parse(const std::string& name);

  friend auto operator<=>(const CurveLabel&, const CurveLabel&) = default;
};

inline constexpr std::size_t kNumLabels = 12;

class Permutation {
 public:
  Permutation();  // identity
  explicit Permutation(std::array<std::uint8_t, kNumLabels> images);
  // Product of disjoint cycles, e.g. {{"R0","R1"},{"G0","B1"}}.
  static Permutation from_cycles(const std::vector<std::vector<std::string>>& cycles);

  CurveLabel operator()(CurveLabel l) const { return CurveLabel::from_id(images_[l.id()]); }
  std::uint8_t image(std::uint8_t id) const { return images_[id]; }
  const std::array<std::uint8_t, kNumLabels>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kNumLabels> images_;
};

class GroupError : public std::runtime_error {
 public:
  enum class Kind { NotPartitionPreserving, DoesNotPreserve, MissingMatrix };
  GroupError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A relabeling together with its lattice actions. Elements outside Γ_6 carry
/// no matrices.
class GroupElement {
 public:
  GroupElement() : GroupElement(Permutation()) {}
  explicit GroupElement(Permutation perm);

  const Permutation& perm() const { return perm_; }
  bool has_matrices() const { return matrix_ny_.has_value(); }
  // Throw GroupError(MissingMatrix) for elements outside Γ_6.
  const IntMatrix& matrix_ny() const;
  const IntMatrix& matrix_n6() const;

  GroupElement inverse() const;
  // Composes permutations and multiplies matrices when both factors have them.
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.perm_ == b.perm_; }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.perm_ <=> b.perm_; }

 private:
  GroupElement(Permutation perm, std::optional<IntMatrix> ny, std::optional<IntMatrix> n6)
      : perm_(perm), matrix_ny_(std::move(ny)), matrix_n6_(std::move(n6)) {}

  Permutation perm_;
  std::optional<IntMatrix> matrix_ny_;
  std::optional<IntMatrix> matrix_n6_;
};

// True iff the permutation has the shape of a Γ_6 element: an even (cyclic)
// permutation of the colours, interior curves to interior curves with the index
// swap chosen per colour, and the boundary swap 0<->3 applied to all colours or
// to none.
bool is_gamma6_shape(const Permutation& p);
// Matrices derived from a Γ_6-shaped permutation.
IntMatrix derived_matrix_ny(const Permutation& p);
IntMatrix derived_matrix_n6(const Permutation& p);

/// A finite permutation group, fully enumerated (order at most a few hundred).
class PermGroup {
 public:
  PermGroup() : PermGroup(std::vector<GroupElement>{}) {}
  explicit PermGroup(std::vector<GroupElement> generators);
  static PermGroup from_elements(std::vector<GroupElement> elements);

  const std::vector<GroupElement>& generators() const { return generators_; }
  // Sorted by permutation.
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

// Named generators of Γ_6.
GroupElement color_cycle();               // R -> G -> B -> R, indices kept
GroupElement interior_swap(Color color);  // s_r, s_g, s_b
GroupElement cremona();                   // R0<->R3, G0<->G3, B0<->B3

PermGroup gamma6();

std::size_t element_order(const GroupElement& g);

using TripleSet = std::set<std::set<CurveLabel>>;
TripleSet make_triples(const std::vector<std::array<const char*, 3>>& triples);

std::set<LatticeVector> orbit_vectors(const PermGroup& g, const LatticeVector& v);
PermGroup vector_stabilizer(const PermGroup& g, const LatticeVector& v);
PermGroup stabilizer_of_triple_set(const PermGroup& g, const TripleSet& triples);
// Throws GroupError(NotPartitionPreserving) unless `extra` maps colour classes
// onto colour classes.
PermGroup extend_group(const PermGroup& g, const GroupElement& extra);
PermGroup center(const PermGroup& g);
// Elements acting as the identity on `sub`; throws GroupError(DoesNotPreserve)
// if some element moves `sub`.
PermGroup kernel_of_lattice_action(const PermGroup& g, const Sublattice& sub);
PermGroup setwise_lattice_stabilizer(const PermGroup& g, const Sublattice& sub);

// Order statistics used to recognise small groups.
struct GroupSignature {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

GroupSignature group_signature(const PermGroup& g);
// One of "trivial", "C2", "C3", "C2xC2", "C4", "C3xC2", "S3", "C2xC2xC2",
// "C3xC2xC2", "C12", "A4", "D6", "Dic3", "C2xA4", "S4", "SL(2,3)", "C2xC2xA4",
// or "unrecognized(<order>)".
std::string identify_small_group(const PermGroup& g);

}  // namespace burniat

#endif  // BURNIAT_GROUPS_HPP
