// The three cocharacter lattices of the Burniat configuration torus:
//
//   0 -> N_Sigma -> N_Y -> N_6 -> 0
//
// N_Y = Z^6 with coordinates (rho1, rho2, gamma1, gamma2, beta1, beta2) of the
// six interior curves, and N_6 ⊂ Z^4 with coordinates (delta, rho, gamma, beta)
// subject to delta + rho + gamma + beta even.

#ifndef BURNIAT_TORIC_SETUP_HPP
#define BURNIAT_TORIC_SETUP_HPP

#include <array>

#include "burniat/lattice.hpp"

namespace burniat {

// An exponent vector of a Laurent monomial in (r1, r2, g1, g2, b1, b2).
using Exponent6 = std::array<Int, 6>;

inline constexpr std::size_t kRankNY = 6;
inline constexpr std::size_t kRankN6 = 4;

// The 4x6 matrix of N_Y -> N_6.
IntMatrix quotient_matrix();
LatticeMap quotient_map();
Sublattice lattice_ny();
Sublattice lattice_n6();
// {(rho, rho, gamma, gamma, beta, beta) : rho + gamma + beta = 0}, built from its
// defining equations rather than from the quotient map.
Sublattice lattice_n_sigma();

// The character of T_6 whose pullback to T_Y is the given monomial.
// Throws LatticeError(NotInvariant) if the monomial is not trivial on T_Sigma.
Covector character_pushforward(const Exponent6& exponent);
// Inverse direction: the monomial on T_Y obtained by composing with N_Y -> N_6.
Exponent6 character_pullback(const Covector& character);

// Characters r1g1b1, r1/r2, g1/g2, b1/b2 used as coordinates on T_6.
std::array<Covector, 4> torus_coordinates();
// Exponents of the torus coordinates along the one-parameter subgroup v,
// i.e. the curve x -> (x^{e_0}, x^{e_1}, x^{e_2}, x^{e_3}).
std::array<Int, 4> curve_exponents(const LatticeVector& cocharacter);

}  // namespace burniat

#endif  // BURNIAT_TORIC_SETUP_HPP
