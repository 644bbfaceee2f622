#include "burniat/toric_setup.hpp"

namespace burniat {

IntMatrix quotient_matrix() {
  return IntMatrix{
      {1, 1, 1, 1, 1, 1},
      {1, -1, 0, 0, 0, 0},
      {0, 0, 1, -1, 0, 0},
      {0, 0, 0, 0, 1, -1},
  };
}

Sublattice lattice_ny() { return Sublattice::full(kRankNY); }

Sublattice lattice_n6() {
  return sublattice_from_congruences(kRankN6, {Congruence{Covector({1, 1, 1, 1}), 2}});
}

LatticeMap quotient_map() { return LatticeMap(quotient_matrix(), lattice_ny(), lattice_n6()); }

Sublattice lattice_n_sigma() {
  const std::vector<Covector> equations{
      Covector({1, -1, 0, 0, 0, 0}),
      Covector({0, 0, 1, -1, 0, 0}),
      Covector({0, 0, 0, 0, 1, -1}),
      Covector({1, 0, 1, 0, 1, 0}),
  };
  return annihilator_sublattice(lattice_ny(), equations);
}

Covector character_pushforward(const Exponent6& e) {
  // Pairing with N_Sigma vanishes iff the three colour sums agree.
  const Sublattice sigma = lattice_n_sigma();
  for (const auto& b : sigma.basis())
    if (dot(e, b.span()) != 0)
      throw LatticeError(LatticeError::Kind::NotInvariant, "monomial is not invariant under T_Sigma");
  // a + b = e0, a - b = e1, a + c = e2, a - c = e3, a + d = e4, a - d = e5.
  const Int two_a = checked::add(e[0], e[1]);
  if (checked::add(e[2], e[3]) != two_a || checked::add(e[4], e[5]) != two_a)
    throw LatticeError(LatticeError::Kind::Inconsistent, "no character of T_6 pulls back to this monomial");
  Covector m({two_a, checked::sub(e[0], e[1]), checked::sub(e[2], e[3]), checked::sub(e[4], e[5])}, 2);
  if (character_pullback(m) != e)
    throw LatticeError(LatticeError::Kind::Inconsistent, "pushforward failed to reproduce the monomial");
  return m;
}

Exponent6 character_pullback(const Covector& character) {
  const IntMatrix q = quotient_matrix();
  Exponent6 e{};
  for (std::size_t i = 0; i < kRankNY; ++i) e[i] = character.pair(q.column(i));
  return e;
}

std::array<Covector, 4> torus_coordinates() {
  return {
      character_pushforward({1, 0, 1, 0, 1, 0}),
      character_pushforward({1, -1, 0, 0, 0, 0}),
      character_pushforward({0, 0, 1, -1, 0, 0}),
      character_pushforward({0, 0, 0, 0, 1, -1}),
  };
}

std::array<Int, 4> curve_exponents(const LatticeVector& cocharacter) {
  auto coords = torus_coordinates();
  std::array<Int, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = coords[i].pair(cocharacter);
  return out;
}

}  // namespace burniat
