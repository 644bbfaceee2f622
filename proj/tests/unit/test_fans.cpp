#include <catch_amalgamated.hpp>

#include <algorithm>

#include "burniat/cases.hpp"
#include "burniat/fans.hpp"

using namespace burniat;

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of the maximal minors of the k x n matrix with the given rows.
Int maximal_minor_gcd(const std::vector<LatticeVector>& rows) {
  std::size_t k = rows.size(), n = rows.front().size();
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, cols);
  Int g = 0;
  for (const auto& c : cols) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[i][c[j]];
    g = gcd(g, determinant(m));
  }
  return g;
}

// A full-dimensional cone is unimodular iff its generators and the lattice basis
// have the same gcd of maximal minors; no lattice coordinates involved.
bool oracle_smooth(const Fan& f, const Cone& c) {
  std::vector<LatticeVector> gens;
  for (auto i : c.rays) gens.push_back(f.rays()[i]);
  return maximal_minor_gcd(gens) == maximal_minor_gcd(f.lattice().basis());
}

std::vector<Cone> deg5_seed_indices(const std::vector<LatticeVector>& rays) {
  std::vector<Cone> seeds;
  for (const auto& gens : deg5_seed_cones()) {
    std::vector<std::size_t> idx;
    for (const auto& g : gens)
      idx.push_back(static_cast<std::size_t>(std::find(rays.begin(), rays.end(), g) - rays.begin()));
    seeds.emplace_back(idx);
  }
  return seeds;
}

}  // namespace

TEST_CASE("the 42 rays and their types") {
  const auto& rays = fan6_rays();
  CHECK(rays.size() == 42);
  std::map<RayType, int> count;
  for (const auto& r : rays) ++count[classify_ray(r)];
  CHECK(count[RayType::A] == 2);
  CHECK(count[RayType::B] == 12);
  CHECK(count[RayType::C] == 16);
  CHECK(count[RayType::D] == 12);
  CHECK(classify_ray({1, 0, 0, 1}) == RayType::B);
  CHECK(classify_ray({-1, 1, 1, 1}) == RayType::C);
  CHECK_THROWS_AS(classify_ray({3, 1, 0, 0}), FanError);
  CHECK_THROWS_AS(classify_ray({2, 2, 0, 0}), FanError);
  CHECK(parse_ray_type('D') == RayType::D);
  CHECK(ray_type_char(RayType::C) == 'C');
}

TEST_CASE("restriction of the 42 rays to each case lattice") {
  std::vector<std::size_t> sizes;
  for (CaseId id : kAllCases) sizes.push_back(restrict_rays(fan6_rays(), case_spec(id).sublattice).size());
  CHECK(sizes == std::vector<std::size_t>{2, 6, 8, 18});
}

TEST_CASE("fan construction rejects bad rays") {
  Sublattice z2 = Sublattice::full(2);
  CHECK_THROWS_AS(Fan(z2, {LatticeVector{2, 0}, LatticeVector{0, 1}}, {Cone{0, 1}}), FanError);
  CHECK_THROWS_AS(Fan(z2, {LatticeVector{1, 0}, LatticeVector{1, 0}}, {Cone{0, 1}}), FanError);
  CHECK_THROWS_AS(Fan(z2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {Cone{0, 5}}), FanError);
  Sublattice line = Sublattice::from_generators(2, {LatticeVector{1, 1}});
  CHECK_THROWS_AS(Fan(line, {LatticeVector{1, 0}}, {Cone{0}}), FanError);
}

TEST_CASE("overlapping cones are detected") {
  Fan bad(Sublattice::full(2), {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}, LatticeVector{-1, 0}},
          {Cone{0, 1}, Cone{2, 3}});
  FanValidation v = validate_fan(bad);
  CHECK_FALSE(v.valid);
  REQUIRE(v.offending.has_value());
  CHECK(validate_fan(hexagon_fan()).valid);
}

TEST_CASE("smoothness against gcds of maximal minors") {
  for (CaseId id : kAllCases) {
    Fan f = build_case_fan(id);
    CHECK(is_smooth_fan(f));
    for (const auto& c : f.max_cones()) {
      CHECK(oracle_smooth(f, c));
      Int d = determinant(f.cone_matrix(c));
      CHECK((d == 1 || d == -1));
    }
  }
  Fan coarse(Sublattice::full(2), {LatticeVector{1, 0}, LatticeVector{1, 2}, LatticeVector{-1, 0}, LatticeVector{0, -1}},
             {Cone{0, 1}, Cone{1, 2}, Cone{2, 3}, Cone{0, 3}});
  CHECK_FALSE(is_smooth_fan(coarse));
  CHECK_FALSE(oracle_smooth(coarse, Cone{0, 1}));
  std::vector<LatticeVector> gens{LatticeVector{1, 0}, LatticeVector{1, 2}};
  CHECK_FALSE(is_smooth_cone(Sublattice::full(2), gens));
}

TEST_CASE("completeness") {
  CHECK(is_complete(projective_line_fan()));
  CHECK(is_complete(hexagon_fan()));
  CHECK(is_complete(eight_ray_fan()));
  Fan h = hexagon_fan();
  std::vector<Cone> cones = h.max_cones();
  cones.pop_back();
  Fan open(h.lattice(), h.rays(), cones);
  CHECK_FALSE(is_complete(open));
  Fan half(Sublattice::full(1), {LatticeVector{1}}, {Cone{0}});
  CHECK_FALSE(is_complete(half));
  CompletenessReport r = completeness_report(build_case_fan(CaseId::Deg5));
  CHECK(r.complete);
  CHECK(r.vertices == 18);
  CHECK(r.ridges == 48);
  CHECK(r.facets == 32);
  CHECK(r.euler == 2);
}

TEST_CASE("two-dimensional isomorphism search") {
  CHECK_FALSE(fan_isomorphic_2d(hexagon_fan(), square_fan()).has_value());
  CHECK_FALSE(fan_isomorphic_2d(hexagon_fan(), eight_ray_fan()).has_value());
  auto m = fan_isomorphic_2d(build_case_fan(CaseId::Deg4a), hexagon_fan());
  REQUIRE(m.has_value());
  Int d = determinant(*m);
  CHECK((d == 1 || d == -1));
  Fan f = build_case_fan(CaseId::Deg4a);
  // Every ray of f lands on a ray of the hexagon.
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    LatticeVector image = *m * f.ray_coordinates(i);
    CHECK(hexagon_fan().find_ray(image).has_value());
  }
  CHECK(fan_isomorphic_2d(build_case_fan(CaseId::Deg4b), eight_ray_fan()).has_value());
}

TEST_CASE("completion is independent of the order of the seeds") {
  CaseSpec spec = case_spec(CaseId::Deg5);
  auto typed = restrict_rays(fan6_rays(), spec.sublattice);
  std::vector<LatticeVector> rays;
  std::vector<RayType> types;
  for (const auto& t : typed) {
    rays.push_back(t.vector);
    types.push_back(t.type);
  }
  std::vector<Cone> seeds = deg5_seed_indices(rays);
  PermGroup g = relabeling_group(CaseId::Deg5).group;
  Fan reference = build_case_fan(CaseId::Deg5);
  CHECK(equivariant_closure(spec.sublattice, rays, seeds, g).size() == 26);
  std::vector<std::size_t> order{0, 1, 2, 3, 4};
  int runs = 0;
  do {
    std::vector<Cone> permuted;
    for (auto i : order) permuted.push_back(seeds[i]);
    REQUIRE(complete_from_seed(spec.sublattice, rays, types, permuted, g).canonical() == reference);
    ++runs;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(runs == 120);
}

TEST_CASE("completion fails without enough rays") {
  CaseSpec spec = case_spec(CaseId::Deg5);
  std::vector<LatticeVector> rays{{1, 0, 0, -1}, {1, -1, 0, 0}, {1, 0, -1, 0}, {-1, 0, 0, 1}};
  std::vector<Cone> seeds{Cone{0, 1, 2}};
  try {
    complete_from_seed(spec.sublattice, rays, {}, seeds, PermGroup());
    FAIL("completion should fail");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanError::Kind::CompletionFailed);
  }
}

TEST_CASE("closure under a group that moves the rays off the list") {
  CaseSpec spec = case_spec(CaseId::Deg5);
  auto typed = restrict_rays(fan6_rays(), spec.sublattice);
  std::vector<LatticeVector> rays;
  for (const auto& t : typed) rays.push_back(t.vector);
  std::vector<Cone> seeds = deg5_seed_indices(rays);
  CHECK_THROWS_AS(equivariant_closure(spec.sublattice, rays, seeds, gamma6()), FanError);
}

TEST_CASE("census and ray orbits") {
  CHECK(cone_type_census(build_case_fan(CaseId::Deg4b)) == std::map<std::string, std::size_t>{{"BC", 4}, {"CD", 4}});
  Fan f5 = build_case_fan(CaseId::Deg5);
  auto orbits = orbits_of_rays(f5, relabeling_group(CaseId::Deg5).group);
  REQUIRE(orbits.size() == 3);
  for (const auto& o : orbits) CHECK(o.rays.size() == 6);
}

TEST_CASE("canonical form is idempotent and order independent") {
  Fan f = build_case_fan(CaseId::Deg4b);
  CHECK(f.canonical() == f);
  std::vector<LatticeVector> rays(f.rays().rbegin(), f.rays().rend());
  std::vector<RayType> types(f.ray_types().rbegin(), f.ray_types().rend());
  std::size_t n = rays.size();
  std::vector<Cone> cones;
  for (const auto& c : f.max_cones()) {
    std::vector<std::size_t> idx;
    for (auto i : c.rays) idx.push_back(n - 1 - i);
    cones.emplace_back(idx);
  }
  CHECK(Fan(f.lattice(), rays, cones, types).canonical() == f);
}
