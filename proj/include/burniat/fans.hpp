// Simplicial rational fans of rank at most 3 over a sublattice of Z^n.
//
// Rays are stored in ambient coordinates; all geometric tests run on their
// coordinates in the Hermite basis of the fan's lattice. Only full-dimensional
// simplicial maximal cones are supported.

#ifndef BURNIAT_FANS_HPP
#define BURNIAT_FANS_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burniat/groups.hpp"
#include "burniat/lattice.hpp"

namespace burniat {

enum class RayType { A, B, C, D };

char ray_type_char(RayType t);
RayType parse_ray_type(char c);

class FanError : public std::runtime_error {
 public:
  enum class Kind { NotARay, InvalidFan, CompletionFailed, DoesNotPreserve };
  FanError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Indices of the rays spanning a cone, sorted ascending.
struct Cone {
  std::vector<std::size_t> rays;

  Cone() = default;
  explicit Cone(std::vector<std::size_t> r);
  Cone(std::initializer_list<std::size_t> r) : Cone(std::vector<std::size_t>(r)) {}
  std::size_t dim() const { return rays.size(); }
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

class Fan {
 public:
  // Throws FanError(InvalidFan) if a ray is outside the lattice, not primitive
  // in it, or repeated, or a cone index is out of range.
  Fan(Sublattice lattice, std::vector<LatticeVector> rays, std::vector<Cone> max_cones,
      std::vector<RayType> ray_types = {});

  const Sublattice& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.rank(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  const std::vector<RayType>& ray_types() const { return ray_types_; }
  bool has_ray_types() const { return !ray_types_.empty(); }

  // Coordinates of ray i in the lattice basis.
  const LatticeVector& ray_coordinates(std::size_t i) const { return coords_[i]; }
  // Square matrix whose columns are the coordinates of the cone's rays.
  IntMatrix cone_matrix(const Cone& c) const;
  std::optional<std::size_t> find_ray(const LatticeVector& v) const;

  // Rays sorted lexicographically, cones re-indexed and sorted.
  Fan canonical() const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  Sublattice lattice_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<RayType> ray_types_;
  std::vector<LatticeVector> coords_;
};

// Generators are given in ambient coordinates of `lattice`.
bool is_smooth_cone(const Sublattice& lattice, std::span<const LatticeVector> generators);
bool is_smooth_fan(const Fan& f);

struct FanValidation {
  bool valid = true;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // indices into max_cones
};

FanValidation validate_fan(const Fan& f);

struct CompletenessReport {
  bool complete = false;
  std::size_t vertices = 0;  // rays used by maximal cones
  std::size_t ridges = 0;    // codimension-one faces
  std::size_t facets = 0;    // maximal cones
  long euler = 0;            // V - E + F at rank 3
  bool ridges_paired = false;
  bool connected = false;
};

CompletenessReport completeness_report(const Fan& f);
inline bool is_complete(const Fan& f) { return completeness_report(f).complete; }

// The generators of the four ray types in N_6.
LatticeVector basic_ray(RayType t);
// The 42 rays of the Γ_6-invariant fan in N_6, sorted.
const std::vector<LatticeVector>& fan6_rays();
// Throws FanError(NotARay) if v lies in none of the four Γ_6-orbits.
RayType classify_ray(const LatticeVector& v);

struct TypedRay {
  LatticeVector vector;
  RayType type;
  friend auto operator<=>(const TypedRay&, const TypedRay&) = default;
};

// Rays of `rays` lying in `sub`, primitive in `sub`, tagged with their type.
std::vector<TypedRay> restrict_rays(std::span<const LatticeVector> rays, const Sublattice& sub);

// The complete rank-2 fan whose maximal cones join angularly adjacent rays.
Fan cyclic_fan_2d(const Sublattice& lattice, std::vector<LatticeVector> rays, std::vector<RayType> types = {});

// The cones obtained from `seeds` under the N_6-action of `g`.
std::vector<Cone> equivariant_closure(const Sublattice& lattice, std::span<const LatticeVector> rays,
                                      std::span<const Cone> seeds, const PermGroup& g);

// Closes `seeds` under `g`, then resolves every ridge lying in a single
// maximal cone by the lowest-index ray giving a smooth cone on the far side
// that contains no other ray and meets the existing cones properly.
// Throws FanError(CompletionFailed).
Fan complete_from_seed(const Sublattice& lattice, std::vector<LatticeVector> rays, std::vector<RayType> types,
                       std::span<const Cone> seeds, const PermGroup& g);

// Maximal cones grouped by the sorted string of their ray types, e.g. "BCD".
std::map<std::string, std::size_t> cone_type_census(const Fan& f);

// A unimodular 2x2 matrix (in lattice-basis coordinates) carrying rays and cones
// of f1 onto those of f2, if one exists.
std::optional<IntMatrix> fan_isomorphic_2d(const Fan& f1, const Fan& f2);

struct RayOrbit {
  std::optional<RayType> type;
  std::vector<std::size_t> rays;
};

// Partition of the rays into orbits under the N_6-action of `g`.
std::vector<RayOrbit> orbits_of_rays(const Fan& f, const PermGroup& g);

}  // namespace burniat

#endif  // BURNIAT_FANS_HPP
