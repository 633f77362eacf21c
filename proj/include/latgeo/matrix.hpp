#pragma once

#include "latgeo/rational.hpp"

#include <optional>
#include <vector>

namespace latgeo {

using RatMat = std::vector<RatVec>;
using IntMat = std::vector<IntVec>;

Rat dot(const RatVec& a, const RatVec& b);
Rat norm_sq(const RatVec& v);
Rat linf_norm_sq(const RatVec& v);

RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scaled(const RatVec& v, const Rat& c);

/// Gram matrix G[i][j] = <rows[i], rows[j]>.
RatMat gram_matrix(const std::vector<RatVec>& rows);

/// Exact determinant by Gaussian elimination (square input).
Rat det_rat(RatMat a);

/// Solves A x = b exactly for square full-rank A; nullopt when singular.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

std::optional<RatMat> invert(const RatMat& a);

/// Rank over the rationals (works for any shape).
int rank_rat(RatMat a);

Rat det_int_as_rat(const IntMat& a);

/// Row-style Hermite normal form of a full-rank square integer matrix:
/// the unique upper-triangular basis of the row lattice with positive
/// diagonal and entries above each pivot reduced into [0, pivot).
IntMat hermite_normal_form(IntMat m);

/// Incremental exact rank tracker: feed vectors, learn whether each is
/// independent of those already absorbed.
class RankTracker {
public:
    /// Returns true (and absorbs v) iff v is independent of prior vectors.
    bool try_add(RatVec v);
    int rank() const { return static_cast<int>(reduced_.size()); }

private:
    std::vector<RatVec> reduced_; // row-echelon, leading entries normalized
    std::vector<int> lead_cols_;
};

} // namespace latgeo
