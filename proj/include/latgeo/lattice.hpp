#pragma once

#include "latgeo/error.hpp"
#include "latgeo/matrix.hpp"
#include "latgeo/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace latgeo {

/// A lattice given by m linearly independent rational generator rows in
/// n-dimensional space. Immutable after construction; construction validates
/// shape and independence.
class LatticeBasis {
public:
    static LatticeBasis from_rows(std::vector<RatVec> rows);

    int rank() const { return m_; }
    int ambient_dim() const { return n_; }
    bool complete() const { return m_ == n_; }

    const std::vector<RatVec>& rows() const { return rows_; }
    const RatVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    const RatMat& gram() const { return gram_; }
    const Rat& det_squared() const { return det_sq_; }

    /// Image of an integer coefficient vector: sum_i coeffs[i] * row(i).
    RatVec image(const IntVec& coeffs) const;

    /// Basis coordinates of an ambient point (full-rank only).
    RatVec basis_coordinates(const RatVec& x) const;

private:
    LatticeBasis(std::vector<RatVec> rows, RatMat gram, Rat det_sq);

    std::vector<RatVec> rows_;
    RatMat gram_;
    Rat det_sq_;
    int m_ = 0;
    int n_ = 0;
};

struct MeshPoint {
    RatVec reduced;      // basis coordinates, each in [0,1)
    IntVec offset;       // integer lattice part
};

struct UnimodularWitness {
    IntMat matrix; // row i of B = sum_j matrix[i][j] * row j of A; det = +-1
};

struct SameLatticeResult {
    bool same = false;
    std::optional<UnimodularWitness> witness;
};

struct PointCountRatio {
    long count = 0;         // lattice points with squared norm <= radius^2
    double ball_volume = 0; // Euclidean ball volume at that radius
    double ratio = 0;       // ball_volume / count
};

LatticeBasis make_lattice(std::vector<RatVec> rows);

/// det(A^T A) exactly; det(tau) is its nonnegative square root.
Rat determinant_squared(const LatticeBasis& L);

/// True iff both bases generate the same lattice. On success the witness
/// carries the unimodular coefficient matrix expressing B's rows in A's.
SameLatticeResult same_lattice(const LatticeBasis& A, const LatticeBasis& B);

/// Splits x into lattice part and fundamental-mesh remainder, half-open
/// convention: reduced coordinates in [0,1).
MeshPoint reduce_mod_mesh(const RatVec& x, const LatticeBasis& L);

/// First pair (i, j), i < j in lexicographic pair order, whose mesh
/// reductions coincide (their difference is then a lattice vector).
std::optional<std::pair<int, int>>
blichfeldt_collision(const std::vector<RatVec>& points, const LatticeBasis& L);

/// Counts lattice points in the closed ball of the given radius and compares
/// the ball volume against the count; the ratio approaches det(tau) as the
/// radius grows. Guarded to ambient dimension <= 4.
PointCountRatio point_count_ratio(const LatticeBasis& L, const Rat& radius);

} // namespace latgeo
