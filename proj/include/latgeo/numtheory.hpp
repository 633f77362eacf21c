#pragma once

#include "latgeo/rational.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace latgeo {

struct TwoSquares {
    std::int64_t p = 0;
    std::int64_t a = 0; // a <= b, both nonnegative, a^2 + b^2 = p
    std::int64_t b = 0;
    std::int64_t q = 0; // the square root of -1 mod p used by the construction
};

struct FourSquares {
    std::int64_t x = 0;
    std::array<std::int64_t, 4> parts{}; // nonincreasing, sum of squares = x
};

struct Approximant {
    Rat alpha;
    std::int64_t Q = 0;
    Int p;
    std::int64_t q = 0; // 0 < q <= Q, |alpha - p/q| <= 1/Q
};

/// Deterministic trial-division primality (inputs are desk-scale).
bool is_prime(std::int64_t n);

/// Smallest q in (0, p) with q^2 = -1 (mod p). Requires p prime, p = 1 mod 4.
std::int64_t sqrt_minus_one_mod_p(std::int64_t p);

/// Decomposes p = a^2 + b^2 for p = 2 or prime p = 1 mod 4 by taking the
/// shortest vector of the planar lattice with rows (1, q) and (0, p).
TwoSquares two_squares(std::int64_t p);

/// Best rational approximation with denominator at most Q: scans
/// q = 1..Q, p = nearest integer; the result satisfies |alpha - p/q| <= 1/Q
/// and the stronger |alpha - p/q| <= 1/(qQ).
Approximant dirichlet_approx(const Rat& alpha, std::int64_t Q);

/// Four-square product combiner: returns z with
/// sum z_i^2 = (sum a_i^2)(sum b_i^2).
std::array<std::int64_t, 4>
euler_four_square_product(const std::array<std::int64_t, 4>& a,
                          const std::array<std::int64_t, 4>& b);

/// (y, z) with 0 <= y, z <= (p-1)/2 and y^2 + z^2 + 1 = 0 (mod p), found by
/// intersecting the residue sets {y^2} and {-z^2 - 1}.
std::pair<std::int64_t, std::int64_t> yz_witness(std::int64_t p);

/// Lagrange decomposition x = x1^2 + x2^2 + x3^2 + x4^2 for any x >= 1.
/// Primes go through the quaternary lattice construction; composites are
/// factored and combined with the product identity.
FourSquares four_squares(std::int64_t x);

} // namespace latgeo
