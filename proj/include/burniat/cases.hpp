// The four secondary/tertiary Burniat families as toric subsystems of the
// degree-6 setup: monomial conditions, subtorus lattices, case fans,
// relabeling groups, F-curves and boundary divisor bookkeeping.

#ifndef BURNIAT_CASES_HPP
#define BURNIAT_CASES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burniat/fans.hpp"
#include "burniat/groups.hpp"
#include "burniat/lattice.hpp"
#include "burniat/toric_setup.hpp"

namespace burniat {

enum class CaseId { Deg3, Deg4a, Deg4b, Deg5 };

inline constexpr std::array<CaseId, 4> kAllCases{CaseId::Deg3, CaseId::Deg4a, CaseId::Deg4b, CaseId::Deg5};

// "3", "4a", "4b", "5".
std::string case_name(CaseId id);
// Accepts "3", "4a", "4b", "5" and the "deg"-prefixed forms.
std::optional<CaseId> parse_case_id(const std::string& s);

enum class TargetFan { ProjectiveLine, Hexagon, EightRay, None };
std::string target_fan_name(TargetFan t);

// Data stated for each case, compared against what is computed.
struct ExpectedCaseData {
  std::size_t rank = 0;
  std::vector<TypedRay> rays;
  std::map<std::string, std::size_t> census;
  TargetFan target = TargetFan::None;
  std::size_t seed_closure_cones = 0;  // rank 3 only
  std::size_t group_order = 0;
  std::string group_label;
  std::size_t kernel_order = 0;
  std::size_t faithful_quotient_order = 0;
  std::size_t fcurve_count = 0;
  std::string generic_component;
  std::map<std::string, int> boundary;  // divisor type -> count
  std::size_t boundary_total = 0;
};

struct CaseSpec {
  CaseId id;
  std::vector<Exponent6> conditions;
  // Annihilator in N_6 of the pushed-forward conditions.
  Sublattice sublattice;
  // The same lattice from its closed-form description.
  Sublattice closed_form;
  TripleSet triples;
  ExpectedCaseData expected;
  // Non-toric boundary data; recorded, never computed.
  std::map<std::string, int> nontoric_divisors;
  std::map<std::string, int> nontoric_points;
  std::vector<std::string> excluded_divisors;
};

CaseSpec case_spec(CaseId id);

// The triple (R_i, G_j, B_k) of a monomial condition r_i g_j b_k = 1.
std::set<CurveLabel> condition_triple(const Exponent6& condition);

// Seed cones of the rank-3 case, as explicit generators in N_6.
std::vector<std::array<LatticeVector, 3>> deg5_seed_cones();

struct CaseGroup {
  PermGroup group;
  PermGroup kernel;
  std::size_t faithful_quotient_order = 0;
};

CaseGroup relabeling_group(CaseId id);

Fan build_case_fan(CaseId id);

// Comparison fans on Z^1 and Z^2.
Fan projective_line_fan();
Fan hexagon_fan();
Fan eight_ray_fan();  // rays (±1,0), (0,±1), (±1,±1)
Fan square_fan();     // rays (±1,0), (0,±1)
Fan target_fan(TargetFan t);

// The six distinguished one-parameter subgroups: images of the standard
// basis of N_Y in N_6.
std::array<LatticeVector, 6> f_curve_cocharacters();

struct FCurveSplit {
  std::vector<LatticeVector> inside;
  std::vector<LatticeVector> transversal;  // not even in the rational span
  std::vector<LatticeVector> other;        // in the span but not the lattice (never expected)
};

FCurveSplit f_curves_in_case(CaseId id);

struct BoundaryReport {
  std::map<std::string, int> computed;  // toric divisors from ray orbits
  std::map<std::string, int> recorded;  // non-toric divisors
  std::map<std::string, int> divisors;  // merged
  std::map<std::string, int> points;
  std::vector<std::string> excluded;
  int total = 0;
};

BoundaryReport boundary_divisors(CaseId id);

}  // namespace burniat

#endif  // BURNIAT_CASES_HPP
