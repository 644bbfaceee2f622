#include "burniat/cases.hpp"

#include <algorithm>

namespace burniat {

std::string case_name(CaseId id) {
  switch (id) {
    case CaseId::Deg3: return "3";
    case CaseId::Deg4a: return "4a";
    case CaseId::Deg4b: return "4b";
    case CaseId::Deg5: return "5";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(const std::string& s) {
  std::string t = s.rfind("deg", 0) == 0 ? s.substr(3) : s;
  for (CaseId id : kAllCases)
    if (case_name(id) == t) return id;
  return std::nullopt;
}

std::string target_fan_name(TargetFan t) {
  switch (t) {
    case TargetFan::ProjectiveLine: return "P1";
    case TargetFan::Hexagon: return "Bl3(P2) hexagon";
    case TargetFan::EightRay: return "Bl4(P1xP1) eight-ray";
    case TargetFan::None: return "none";
  }
  return "?";
}

std::set<CurveLabel> condition_triple(const Exponent6& condition) {
  std::set<CurveLabel> triple;
  for (int c = 0; c < 3; ++c) {
    Int e1 = condition[2 * c], e2 = condition[2 * c + 1];
    if (!((e1 == 1 && e2 == 0) || (e1 == 0 && e2 == 1)))
      throw std::invalid_argument("condition is not of the form r_i g_j b_k = 1");
    triple.insert(CurveLabel{static_cast<Color>(c), static_cast<std::uint8_t>(e1 == 1 ? 1 : 2)});
  }
  return triple;
}

namespace {

// Monomial r_i g_j b_k as an exponent vector.
Exponent6 triple_monomial(int i, int j, int k) {
  Exponent6 e{};
  e[i - 1] = 1;
  e[2 + j - 1] = 1;
  e[4 + k - 1] = 1;
  return e;
}

std::vector<TypedRay> typed(std::initializer_list<std::pair<RayType, LatticeVector>> rays, bool with_negatives) {
  std::vector<TypedRay> out;
  for (const auto& [t, v] : rays) {
    out.push_back({v, t});
    if (with_negatives) out.push_back({-v, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Sublattice n6_annihilator(std::initializer_list<std::vector<Int>> covectors) {
  std::vector<Covector> conds;
  for (const auto& c : covectors) conds.emplace_back(c);
  return annihilator_sublattice(lattice_n6(), conds);
}

}  // namespace

std::vector<std::array<LatticeVector, 3>> deg5_seed_cones() {
  const LatticeVector e1{1, 1, -1, -1}, e2{1, -1, 1, -1}, e3{1, -1, -1, 1};
  auto half = [](const LatticeVector& v) { return v.divided_exactly(2); };
  return {
      {half(e1 + e2), half(e2 + e3), half(e3 + e1)},  // BBB
      {e1, half(e1 + e2), half(e1 + e3)},             // BBC
      {e1, half(e1 + e2), half(e1 - e3)},             // BCD
      {half(e1 + e2), half(e1 - e3), half(e2 - e3)},  // BDD
      {e1, half(e1 - e2), half(e1 - e3)},             // CDD
  };
}

CaseSpec case_spec(CaseId id) {
  CaseSpec spec{id, {}, Sublattice::full(0), Sublattice::full(0), {}, {}, {}, {}, {}};
  ExpectedCaseData& ex = spec.expected;
  switch (id) {
    case CaseId::Deg3:
      spec.conditions = {triple_monomial(2, 1, 1), triple_monomial(1, 2, 1), triple_monomial(1, 1, 2)};
      spec.closed_form = Sublattice::from_generators(4, {LatticeVector{-1, 1, 1, 1}});
      ex.rank = 1;
      ex.rays = typed({{RayType::C, {-1, 1, 1, 1}}}, true);
      ex.census = {{"C", 2}};
      ex.target = TargetFan::ProjectiveLine;
      ex.group_order = 6;
      ex.group_label = "C3xC2";
      ex.kernel_order = 3;
      ex.faithful_quotient_order = 2;
      ex.fcurve_count = 0;
      ex.generic_component = "#0_3(3)";
      ex.boundary = {{"C", 1}, {"E", 1}};
      ex.boundary_total = 2;
      spec.nontoric_divisors = {{"E", 1}};
      break;
    case CaseId::Deg4a:
      spec.conditions = {triple_monomial(1, 1, 1), triple_monomial(2, 2, 2)};
      spec.closed_form = n6_annihilator({{1, 0, 0, 0}, {0, 1, 1, 1}});
      ex.rank = 2;
      ex.rays = typed({{RayType::D, {0, 1, -1, 0}}, {RayType::D, {0, 0, 1, -1}}, {RayType::D, {0, -1, 0, 1}}}, true);
      ex.census = {{"DD", 6}};
      ex.target = TargetFan::Hexagon;
      ex.group_order = 12;
      ex.group_label = "C3xC2xC2";
      ex.kernel_order = 2;
      ex.faithful_quotient_order = 6;
      ex.fcurve_count = 0;
      ex.generic_component = "#0_2(4)";
      ex.boundary = {{"D", 1}};
      ex.boundary_total = 1;
      spec.nontoric_points = {{"E", 1}};
      spec.excluded_divisors = {"G"};
      break;
    case CaseId::Deg4b:
      spec.conditions = {triple_monomial(1, 1, 1), triple_monomial(1, 2, 2)};
      spec.closed_form = n6_annihilator({{1, 1, 0, 0}, {0, 0, 1, 1}});
      ex.rank = 2;
      ex.rays = typed({{RayType::B, {1, -1, 0, 0}},
                       {RayType::C, {1, -1, 1, -1}},
                       {RayType::C, {1, -1, -1, 1}},
                       {RayType::D, {0, 0, 1, -1}}},
                      true);
      ex.census = {{"BC", 4}, {"CD", 4}};
      ex.target = TargetFan::EightRay;
      ex.group_order = 4;
      ex.group_label = "C2xC2";
      ex.kernel_order = 1;
      ex.faithful_quotient_order = 4;
      ex.fcurve_count = 1;
      ex.generic_component = "#0_2(4)";
      ex.boundary = {{"B", 1}, {"C", 1}, {"D", 1}, {"E", 1}, {"G", 1}};
      ex.boundary_total = 5;
      spec.nontoric_divisors = {{"E", 1}, {"G", 1}};
      spec.excluded_divisors = {"F"};
      break;
    case CaseId::Deg5: {
      spec.conditions = {triple_monomial(1, 1, 1)};
      spec.closed_form = n6_annihilator({{1, 1, 1, 1}});
      const LatticeVector e1{1, 1, -1, -1}, e2{1, -1, 1, -1}, e3{1, -1, -1, 1};
      auto half = [](const LatticeVector& v) { return v.divided_exactly(2); };
      ex.rank = 3;
      ex.rays = typed({{RayType::C, e1},
                       {RayType::C, e2},
                       {RayType::C, e3},
                       {RayType::B, half(e1 + e2)},
                       {RayType::B, half(e2 + e3)},
                       {RayType::B, half(e3 + e1)},
                       {RayType::D, half(e1 - e2)},
                       {RayType::D, half(e2 - e3)},
                       {RayType::D, half(e1 - e3)}},
                      true);
      ex.census = {{"BBB", 2}, {"BBC", 6}, {"BCD", 12}, {"BDD", 6}, {"CDD", 6}};
      ex.seed_closure_cones = 26;
      ex.group_order = 6;
      ex.group_label = "C3xC2";
      ex.kernel_order = 1;
      ex.faithful_quotient_order = 6;
      ex.fcurve_count = 3;
      ex.generic_component = "#0_1(5)";
      ex.boundary = {{"B", 1}, {"C", 1}, {"D", 1}, {"E", 1}, {"G", 1}, {"H", 2}};
      ex.boundary_total = 7;
      spec.nontoric_divisors = {{"E", 1}, {"G", 1}, {"H", 2}};
      spec.excluded_divisors = {"F"};
      break;
    }
  }
  std::vector<Covector> characters;
  for (const auto& c : spec.conditions) {
    characters.push_back(character_pushforward(c));
    spec.triples.insert(condition_triple(c));
  }
  spec.sublattice = annihilator_sublattice(lattice_n6(), characters);
  return spec;
}

CaseGroup relabeling_group(CaseId id) {
  CaseSpec spec = case_spec(id);
  PermGroup g = stabilizer_of_triple_set(gamma6(), spec.triples);
  PermGroup k = kernel_of_lattice_action(g, spec.sublattice);
  std::size_t q = g.order() / k.order();
  return {std::move(g), std::move(k), q};
}

Fan build_case_fan(CaseId id) {
  CaseSpec spec = case_spec(id);
  const Sublattice& sub = spec.sublattice;
  auto restricted = restrict_rays(fan6_rays(), sub);
  std::vector<LatticeVector> rays;
  std::vector<RayType> types;
  for (const auto& r : restricted) {
    rays.push_back(r.vector);
    types.push_back(r.type);
  }
  switch (sub.rank()) {
    case 1: {
      std::vector<Cone> cones;
      for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back(Cone{i});
      return Fan(sub, std::move(rays), std::move(cones), std::move(types)).canonical();
    }
    case 2:
      return cyclic_fan_2d(sub, std::move(rays), std::move(types)).canonical();
    case 3: {
      std::vector<Cone> seeds;
      for (const auto& gens : deg5_seed_cones()) {
        std::vector<std::size_t> idx;
        for (const auto& v : gens) {
          auto it = std::find(rays.begin(), rays.end(), v);
          if (it == rays.end())
            throw FanError(FanError::Kind::CompletionFailed, "seed generator " + v.to_string() + " is not a ray");
          idx.push_back(static_cast<std::size_t>(it - rays.begin()));
        }
        seeds.emplace_back(std::move(idx));
      }
      CaseGroup g = relabeling_group(id);
      return complete_from_seed(sub, std::move(rays), std::move(types), seeds, g.group).canonical();
    }
    default:
      throw FanError(FanError::Kind::InvalidFan, "unexpected case lattice rank");
  }
}

Fan projective_line_fan() { return Fan(Sublattice::full(1), {LatticeVector{-1}, LatticeVector{1}}, {Cone{0}, Cone{1}}); }

Fan hexagon_fan() {
  return cyclic_fan_2d(Sublattice::full(2), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
}

Fan eight_ray_fan() {
  return cyclic_fan_2d(Sublattice::full(2), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

Fan square_fan() { return cyclic_fan_2d(Sublattice::full(2), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

Fan target_fan(TargetFan t) {
  switch (t) {
    case TargetFan::ProjectiveLine: return projective_line_fan();
    case TargetFan::Hexagon: return hexagon_fan();
    case TargetFan::EightRay: return eight_ray_fan();
    case TargetFan::None: break;
  }
  throw std::invalid_argument("no target fan");
}

std::array<LatticeVector, 6> f_curve_cocharacters() {
  IntMatrix q = quotient_matrix();
  std::array<LatticeVector, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = q.column(i);
  return out;
}

FCurveSplit f_curves_in_case(CaseId id) {
  CaseSpec spec = case_spec(id);
  FCurveSplit split;
  for (const auto& v : f_curve_cocharacters()) {
    if (spec.sublattice.contains(v)) split.inside.push_back(v);
    else if (!spec.sublattice.in_rational_span(v)) split.transversal.push_back(v);
    else split.other.push_back(v);
  }
  return split;
}

BoundaryReport boundary_divisors(CaseId id) {
  CaseSpec spec = case_spec(id);
  Fan fan = build_case_fan(id);
  CaseGroup g = relabeling_group(id);
  BoundaryReport rep;
  for (const auto& orbit : orbits_of_rays(fan, g.group))
    ++rep.computed[std::string(1, ray_type_char(*orbit.type))];
  rep.recorded = spec.nontoric_divisors;
  rep.divisors = rep.computed;
  for (const auto& [k, v] : rep.recorded) rep.divisors[k] += v;
  rep.points = spec.nontoric_points;
  rep.excluded = spec.excluded_divisors;
  for (const auto& [k, v] : rep.divisors) rep.total += v;
  return rep;
}

}  // namespace burniat
