#include <catch_amalgamated.hpp>

#include <set>

#include "burniat/groups.hpp"
#include "burniat/toric_setup.hpp"

using namespace burniat;

namespace {

// The degree-6 action on N_6 written down directly as signed permutation
// matrices: cycle the three colour coordinates, flip one colour coordinate,
// or negate everything.
std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> independent_n6_group() {
  auto less = [](const IntMatrix& a, const IntMatrix& b) { return a.to_string() < b.to_string(); };
  std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> group(less);
  std::vector<IntMatrix> gens{
      IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}},
      IntMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}},
      IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}},
      IntMatrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
  };
  std::vector<IntMatrix> frontier{IntMatrix::identity(4)};
  group.insert(IntMatrix::identity(4));
  while (!frontier.empty()) {
    IntMatrix m = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      IntMatrix p = g * m;
      if (group.insert(p).second) frontier.push_back(p);
    }
  }
  return group;
}

std::vector<LatticeVector> small_n6_vectors() {
  std::vector<LatticeVector> out;
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c)
        for (Int d = -2; d <= 2; ++d)
          if ((a + b + c + d) % 2 == 0) out.push_back({a, b, c, d});
  return out;
}

}  // namespace

TEST_CASE("labels and permutations") {
  CHECK(CurveLabel::parse("G2").name() == "G2");
  CHECK(CurveLabel::parse("B0").is_boundary());
  CHECK_FALSE(CurveLabel::parse("R1").is_boundary());
  CHECK_THROWS(CurveLabel::parse("Q1"));
  Permutation p = Permutation::from_cycles({{"R0", "R3"}, {"G1", "B2"}});
  CHECK((p * p).is_identity());
  CHECK(p.inverse() == p);
  CHECK(p(CurveLabel::parse("G1")).name() == "B2");
}

TEST_CASE("the degree-6 relabeling group") {
  PermGroup g = gamma6();
  CHECK(g.order() == 48);
  CHECK_FALSE(g.is_abelian());
  GroupSignature sig = group_signature(g);
  CHECK(sig.element_orders == std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 8}, {6, 24}});
  CHECK(identify_small_group(g) == "C2xC2xA4");
  for (const auto& e : g.elements()) {
    CHECK(is_gamma6_shape(e.perm()));
    CHECK(e.has_matrices());
  }
}

TEST_CASE("N_6 action matches an independently generated matrix group") {
  auto expected = independent_n6_group();
  REQUIRE(expected.size() == 48);
  auto less = [](const IntMatrix& a, const IntMatrix& b) { return a.to_string() < b.to_string(); };
  std::set<IntMatrix, bool (*)(const IntMatrix&, const IntMatrix&)> got(less);
  PermGroup g = gamma6();
  for (const auto& e : g.elements()) got.insert(e.matrix_n6());
  CHECK(got == expected);
}

TEST_CASE("orbit sizes of the basic rays under the independent matrix group") {
  auto group = independent_n6_group();
  auto orbit_size = [&](const LatticeVector& v) {
    std::set<LatticeVector> orbit;
    for (const auto& m : group) orbit.insert(m * v);
    return orbit.size();
  };
  CHECK(orbit_size({2, 0, 0, 0}) == 2);
  CHECK(orbit_size({1, 1, 0, 0}) == 12);
  CHECK(orbit_size({1, 1, 1, 1}) == 16);
  CHECK(orbit_size({0, 1, 0, 1}) == 12);
  PermGroup g = gamma6();
  CHECK(orbit_vectors(g, {2, 0, 0, 0}).size() == 2);
  CHECK(orbit_vectors(g, {1, 1, 0, 0}).size() == 12);
  CHECK(orbit_vectors(g, {1, 1, 1, 1}).size() == 16);
  CHECK(orbit_vectors(g, {0, 1, 0, 1}).size() == 12);
}

TEST_CASE("lattice actions are homomorphisms on all pairs") {
  PermGroup g = gamma6();
  IntMatrix q = quotient_matrix();
  for (const auto& a : g.elements()) {
    CHECK(q * a.matrix_ny() == a.matrix_n6() * q);
    for (const auto& b : g.elements()) {
      GroupElement ab(a.perm() * b.perm());
      REQUIRE(ab.matrix_n6() == a.matrix_n6() * b.matrix_n6());
      REQUIRE(ab.matrix_ny() == a.matrix_ny() * b.matrix_ny());
      REQUIRE((a * b).matrix_n6() == ab.matrix_n6());
    }
  }
}

TEST_CASE("orbit-stabilizer identity") {
  PermGroup g = gamma6();
  for (const auto& v : small_n6_vectors()) {
    PermGroup stab = vector_stabilizer(g, v);
    REQUIRE(orbit_vectors(g, v).size() * stab.order() == g.order());
    CHECK(stab.is_subgroup_of(g));
  }
  LatticeVector w{1, 0, 1, 0, 1, 0};
  CHECK(orbit_vectors(g, w).size() * vector_stabilizer(g, w).order() == 48);
}

TEST_CASE("stabilizers of condition triples") {
  PermGroup g = gamma6();
  auto order = [&](std::vector<std::array<const char*, 3>> t) {
    return stabilizer_of_triple_set(g, make_triples(t)).order();
  };
  CHECK(order({{"R2", "G1", "B1"}, {"R1", "G2", "B1"}, {"R1", "G1", "B2"}}) == 6);
  CHECK(order({{"R1", "G1", "B1"}, {"R2", "G2", "B2"}}) == 12);
  CHECK(order({{"R1", "G1", "B1"}, {"R1", "G2", "B2"}}) == 4);
  CHECK(order({{"R1", "G1", "B1"}}) == 6);
  CHECK_THROWS(stabilizer_of_triple_set(g, make_triples({{"R1", "R2", "B1"}})));
}

TEST_CASE("extension by a partition-preserving relabeling") {
  PermGroup g = stabilizer_of_triple_set(gamma6(), make_triples({{"R1", "G1", "B1"}, {"R2", "G2", "B2"}}));
  GroupElement sigma(
      Permutation::from_cycles({{"R0", "R1"}, {"R3", "R2"}, {"G0", "B1"}, {"G3", "B2"}, {"B0", "G1"}, {"B3", "G2"}}));
  CHECK_FALSE(sigma.has_matrices());
  CHECK_THROWS_AS(sigma.matrix_n6(), GroupError);
  PermGroup ext = extend_group(g, sigma);
  CHECK(ext.order() == 24);
  PermGroup z = center(ext);
  CHECK(z.order() == 2);
  GroupElement inv = interior_swap(Color::R) * interior_swap(Color::G) * interior_swap(Color::B) * cremona();
  CHECK(z.contains(inv.perm()));
  GroupElement bad(Permutation::from_cycles({{"R0", "G0"}}));
  CHECK_THROWS_AS(extend_group(g, bad), GroupError);
}

TEST_CASE("kernels and setwise stabilizers of sublattices") {
  PermGroup g = gamma6();
  Sublattice n3 = Sublattice::from_generators(4, {LatticeVector{-1, 1, 1, 1}});
  CHECK(setwise_lattice_stabilizer(g, n3).order() == 6);
  CHECK_THROWS_AS(kernel_of_lattice_action(g, n3), GroupError);
  Sublattice all = lattice_n6();
  CHECK(kernel_of_lattice_action(g, all).order() == 1);
  CHECK(center(g).order() == 4);
}

TEST_CASE("small group identification") {
  CHECK(identify_small_group(PermGroup()) == "trivial");
  CHECK(identify_small_group(PermGroup({cremona()})) == "C2");
  CHECK(identify_small_group(PermGroup({color_cycle()})) == "C3");
  CHECK(identify_small_group(PermGroup({color_cycle(), cremona()})) == "C3xC2");
  CHECK(identify_small_group(PermGroup({interior_swap(Color::R), interior_swap(Color::G), interior_swap(Color::B)})) ==
        "C2xC2xC2");
  CHECK(element_order(color_cycle() * cremona()) == 6);
}
