#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "burniat/cases.hpp"

using namespace burniat;

TEST_CASE("case names round trip") {
  for (CaseId id : kAllCases) {
    CHECK(parse_case_id(case_name(id)) == id);
    CHECK(parse_case_id("deg" + case_name(id)) == id);
  }
  CHECK_FALSE(parse_case_id("6").has_value());
}

TEST_CASE("case lattices from conditions equal their closed forms") {
  for (CaseId id : kAllCases) {
    CaseSpec s = case_spec(id);
    CHECK(s.sublattice == s.closed_form);
    CHECK(s.sublattice.rank() == s.expected.rank);
    CHECK(s.sublattice.is_saturated_in(lattice_n6()));
    for (const auto& c : s.conditions) {
      Covector m = character_pushforward(c);
      for (const auto& b : s.sublattice.basis()) CHECK(m.pair_numerator(b) == 0);
    }
  }
  CHECK(case_spec(CaseId::Deg3).sublattice == Sublattice::from_generators(4, {LatticeVector{-1, 1, 1, 1}}));
  CHECK(case_spec(CaseId::Deg4b).sublattice ==
        Sublattice::from_generators(4, {LatticeVector{1, -1, 0, 0}, LatticeVector{0, 0, 1, -1}}));
  Sublattice n5 = case_spec(CaseId::Deg5).sublattice;
  CHECK(n5.contains(LatticeVector{1, 0, 0, -1}));
  CHECK(n5.contains(LatticeVector{0, 1, 0, -1}));
  CHECK(n5.contains(LatticeVector{0, 0, 1, -1}));
  CHECK(n5.rank() == 3);
}

TEST_CASE("condition triples match the monomials") {
  CHECK(condition_triple({0, 1, 1, 0, 1, 0}) ==
        std::set<CurveLabel>{CurveLabel::parse("R2"), CurveLabel::parse("G1"), CurveLabel::parse("B1")});
  CHECK_THROWS(condition_triple({1, 1, 1, 0, 1, 0}));
  CHECK(case_spec(CaseId::Deg4a).triples == make_triples({{"R1", "G1", "B1"}, {"R2", "G2", "B2"}}));
}

TEST_CASE("case fans") {
  for (CaseId id : kAllCases) {
    CaseSpec s = case_spec(id);
    Fan f = build_case_fan(id);
    CHECK(validate_fan(f).valid);
    CHECK(is_smooth_fan(f));
    CHECK(is_complete(f));
    CHECK(cone_type_census(f) == s.expected.census);
    REQUIRE(f.rays().size() == s.expected.rays.size());
    for (std::size_t i = 0; i < f.rays().size(); ++i) {
      CHECK(f.ray_types()[i] != RayType::A);
      CHECK(classify_ray(f.rays()[i]) == f.ray_types()[i]);
    }
  }
  CHECK(build_case_fan(CaseId::Deg5).max_cones().size() == 32);
}

TEST_CASE("relabeling groups of the cases") {
  struct Row {
    CaseId id;
    std::size_t order, kernel, quotient;
    const char* label;
  };
  for (const Row& r : {Row{CaseId::Deg3, 6, 3, 2, "C3xC2"}, Row{CaseId::Deg4a, 12, 2, 6, "C3xC2xC2"},
                       Row{CaseId::Deg4b, 4, 1, 4, "C2xC2"}, Row{CaseId::Deg5, 6, 1, 6, "C3xC2"}}) {
    CaseGroup g = relabeling_group(r.id);
    CHECK(g.group.order() == r.order);
    CHECK(g.kernel.order() == r.kernel);
    CHECK(g.faithful_quotient_order == r.quotient);
    CHECK(identify_small_group(g.group) == r.label);
    CHECK(g.group.order() == g.kernel.order() * g.faithful_quotient_order);
  }
  CHECK(setwise_lattice_stabilizer(gamma6(), case_spec(CaseId::Deg5).sublattice) == relabeling_group(CaseId::Deg5).group);
}

TEST_CASE("F-curves") {
  std::vector<std::size_t> counts;
  for (CaseId id : kAllCases) {
    FCurveSplit s = f_curves_in_case(id);
    counts.push_back(s.inside.size());
    CHECK(s.other.empty());
    CHECK(s.inside.size() + s.transversal.size() == 6);
  }
  CHECK(counts == std::vector<std::size_t>{0, 0, 1, 3});
  CHECK(f_curves_in_case(CaseId::Deg4b).inside == std::vector<LatticeVector>{{1, -1, 0, 0}});
  for (const auto& v : f_curve_cocharacters()) {
    CHECK(v[0] == 1);
    CHECK(std::abs(v[1]) + std::abs(v[2]) + std::abs(v[3]) == 1);
  }
}

TEST_CASE("boundary divisors") {
  BoundaryReport b3 = boundary_divisors(CaseId::Deg3);
  CHECK(b3.divisors == std::map<std::string, int>{{"C", 1}, {"E", 1}});
  CHECK(b3.total == 2);
  BoundaryReport b4a = boundary_divisors(CaseId::Deg4a);
  CHECK(b4a.divisors == std::map<std::string, int>{{"D", 1}});
  CHECK(b4a.points == std::map<std::string, int>{{"E", 1}});
  BoundaryReport b4b = boundary_divisors(CaseId::Deg4b);
  CHECK(b4b.computed == std::map<std::string, int>{{"B", 1}, {"C", 1}, {"D", 1}});
  CHECK(b4b.total == 5);
  BoundaryReport b5 = boundary_divisors(CaseId::Deg5);
  CHECK(b5.divisors == std::map<std::string, int>{{"B", 1}, {"C", 1}, {"D", 1}, {"E", 1}, {"G", 1}, {"H", 2}});
  CHECK(b5.total == 7);
  CHECK(b5.excluded == std::vector<std::string>{"F"});
}

TEST_CASE("target fans") {
  CHECK(target_fan(TargetFan::Hexagon).rays().size() == 6);
  CHECK(target_fan(TargetFan::EightRay).rays().size() == 8);
  CHECK(target_fan(TargetFan::ProjectiveLine).rays().size() == 2);
  CHECK_THROWS(target_fan(TargetFan::None));
}
