#pragma once

#include "latgeo/lattice.hpp"

#include <vector>

namespace latgeo {

/// sign * sqrt(square): exact carrier for quantities whose squares are
/// rational (vector norms, orthogonal-frame coefficients). Comparison and
/// testing happen on the squares; value() is a display shadow.
struct ExactSqrt {
    int sign = 0;   // -1, 0, +1
    Rat square = 0; // >= 0

    double value() const;

    static ExactSqrt from_signed_square(const Rat& signed_sq);
};

struct GramSchmidtData {
    std::vector<RatVec> tilde;     // orthogonalized vectors, input order
    RatMat mu;                     // lower triangular, unit diagonal
    std::vector<Rat> tilde_norms_sq;
};

/// Exact Gram-Schmidt orthogonalization; input order is respected.
GramSchmidtData gram_schmidt(const LatticeBasis& L);

/// n x m matrix expressing each basis vector in the orthonormal frame
/// tilde_a_j / ||tilde_a_j||: entry (j, i) = mu_{i,j} ||tilde_a_j|| below the
/// diagonal (as stored: above it in row-major), ||tilde_a_i|| on it, zero
/// elsewhere. Rows past the rank are zero.
std::vector<std::vector<ExactSqrt>> gso_triangular(const LatticeBasis& L);

/// min_i ||tilde_a_i||^2 — a certified lower bound on lambda_1^2.
Rat gso_min_norm_sq(const LatticeBasis& L);

} // namespace latgeo
