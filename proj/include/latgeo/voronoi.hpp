#pragma once

#include "latgeo/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latgeo {

struct RelevantVector {
    IntVec coeffs;            // canonical-sign representative
    RatVec vector;
    Rat norm_sq;
    std::vector<int> coset;   // nonzero class of tau/2tau it came from (0/1 per coordinate)
};

struct RelevantVectorSet {
    std::vector<RelevantVector> vectors; // one entry per +- pair, by coset order
};

struct RadiusReport {
    Rat packing_radius_sq;       // lambda_1^2 / 4
    Rat covering_lower_sq;       // lambda_n^2 / 4
    double covering_lower_volumetric_sq; // (det(tau)/V_n)^(2/n), numeric class
    Rat covering_upper_sq;       // n * lambda_n^2 / 4
    std::optional<double> covering_estimate;
};

/// One enumeration per nonzero coset of tau/2tau: v is kept iff +-v are the
/// only squared-norm minimizers of its coset. Guarded to dimension <= 6.
RelevantVectorSet relevant_vectors(const LatticeBasis& L,
                                   std::uint64_t budget = 100'000'000);

/// Closed-cell membership: |<x, v>| <= <v, v>/2 for every relevant vector,
/// tested exactly.
bool in_voronoi_cell(const RatVec& x, const LatticeBasis& L,
                     std::uint64_t budget = 100'000'000);

/// Packing radius (exact) and the covering-radius sandwich; the volumetric
/// lower bound mixes a transcendental ball volume and is reported in the
/// numeric precision class. Pass a grid size to include the estimate.
RadiusReport radius_report(const LatticeBasis& L,
                           std::optional<int> grid_per_axis = std::nullopt,
                           std::uint64_t budget = 100'000'000);

/// Max over fundamental-mesh grid points of the exact distance to the
/// lattice; approaches the covering radius from below as the grid refines.
/// Guarded to dimension <= 3.
double covering_radius_estimate(const LatticeBasis& L, int grid_per_axis,
                                std::uint64_t budget = 100'000'000);

} // namespace latgeo
