// Deliberately naive reference implementations. They share no code with the
// library algorithms they are used to check.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fieldunits/extension.hpp"
#include "fieldunits/lattice.hpp"

namespace fieldunits::oracle {

/// Trial division.
bool is_prime_power(std::uint64_t n);
/// F_q^x is cyclic of order q - 1, and a cyclic group is indecomposable
/// exactly when its order is 1 or a prime power.
bool unit_group_indecomposable(std::uint64_t q);

/// Polynomials over GF(2) of degree < 64 as bit masks.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b);
bool gf2_irreducible(std::uint64_t f);
/// (factor, multiplicity) by trial division, ascending as integers.
std::vector<std::pair<std::uint64_t, unsigned>> gf2_factor(std::uint64_t f);

/// Rank over Q by Gaussian elimination on exact rationals.
std::size_t rational_rank(const IntMatrix& m);

/// det of the matrix of multiplication by u on the basis 1, y, ..., y^(d-1),
/// by Gaussian elimination over F_q(t).
RatFunc multiplication_norm(const ExtElem& u);

}  // namespace fieldunits::oracle
