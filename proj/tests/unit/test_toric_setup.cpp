#include <catch_amalgamated.hpp>

#include "burniat/toric_setup.hpp"

using namespace burniat;

namespace {

// All covectors with numerators in [-r, r] over denominator 2 whose pullback
// is `e`, found by exhaustive search.
std::vector<Covector> brute_force_pushforward(const Exponent6& e, Int r) {
  std::vector<Covector> hits;
  const IntMatrix q = quotient_matrix();
  for (Int a = -r; a <= r; ++a)
    for (Int b = -r; b <= r; ++b)
      for (Int c = -r; c <= r; ++c)
        for (Int d = -r; d <= r; ++d) {
          Covector m({a, b, c, d}, 2);
          Exponent6 got{};
          bool integral = true;
          for (std::size_t i = 0; i < 6 && integral; ++i) {
            Int num = m.pair_numerator(q.column(i));
            if (num % m.denominator() != 0) integral = false;
            else got[i] = num / m.denominator();
          }
          if (integral && got == e) hits.push_back(m);
        }
  return hits;
}

}  // namespace

TEST_CASE("the quotient map is onto N_6 with kernel N_Sigma") {
  ImageAndKernel ik = image_and_kernel(quotient_map());
  CHECK(ik.image == lattice_n6());
  CHECK(ik.kernel == lattice_n_sigma());
  CHECK(lattice_n6().index() == 2);
  CHECK(lattice_n_sigma().rank() == 2);
  CHECK(lattice_n_sigma().contains(LatticeVector{1, 1, -1, -1, 0, 0}));
  CHECK_FALSE(lattice_n_sigma().contains(LatticeVector{1, 1, 1, 1, 1, 1}));
}

TEST_CASE("pushforward of named monomials") {
  CHECK(character_pushforward({1, 0, 1, 0, 1, 0}) == Covector({1, 1, 1, 1}, 2));
  CHECK(character_pushforward({1, -1, 0, 0, 0, 0}) == Covector({0, 1, 0, 0}));
  CHECK(character_pushforward({0, 1, 1, 0, 1, 0}) == Covector({1, -1, 1, 1}, 2));
  CHECK_THROWS_AS(character_pushforward({1, 0, 0, 0, 0, 0}), LatticeError);
  try {
    character_pushforward({1, 1, 0, 0, 0, 0});
    FAIL("expected an error");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::NotInvariant);
  }
}

TEST_CASE("pushforward agrees with exhaustive search") {
  int checked_count = 0;
  for (Int r1 = -1; r1 <= 1; ++r1)
    for (Int r2 = -1; r2 <= 1; ++r2)
      for (Int g1 = -1; g1 <= 1; ++g1)
        for (Int g2 = -1; g2 <= 1; ++g2)
          for (Int b1 = -1; b1 <= 1; ++b1)
            for (Int b2 = -1; b2 <= 1; ++b2) {
              Exponent6 e{r1, r2, g1, g2, b1, b2};
              if (r1 + r2 != g1 + g2 || r1 + r2 != b1 + b2) {
                CHECK_THROWS_AS(character_pushforward(e), LatticeError);
                continue;
              }
              auto hits = brute_force_pushforward(e, 4);
              REQUIRE(hits.size() == 1);
              CHECK(character_pushforward(e) == hits.front());
              CHECK(character_pullback(hits.front()) == e);
              ++checked_count;
            }
  CHECK(checked_count > 10);
}

TEST_CASE("curve exponents of the F-curve cocharacters") {
  CHECK(curve_exponents(LatticeVector{1, -1, 0, 0}) == std::array<Int, 4>{0, -1, 0, 0});
  CHECK(curve_exponents(LatticeVector{1, 1, 0, 0}) == std::array<Int, 4>{1, 1, 0, 0});
  CHECK(curve_exponents(LatticeVector{1, 0, 0, -1}) == std::array<Int, 4>{0, 0, 0, -1});
}
