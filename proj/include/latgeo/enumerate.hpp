#pragma once

#include "latgeo/gso.hpp"
#include "latgeo/lattice.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace latgeo {

inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

/// Depth-first coefficient-tree search over integer coefficient vectors x
/// with ||x A - target||^2 <= radius_sq, pruned per level by the projections
/// onto the orthogonalized directions. Everything is exact rational
/// arithmetic; the search tree is certifiably exhaustive.
struct EnumRequest {
    Rat radius_sq;                 // inclusive squared-distance bound
    RatVec center;                 // target in basis coordinates; empty = origin
    std::vector<int> parity;       // per-coefficient residue mod 2; empty = none
    bool skip_zero = true;         // omit x = 0 (only sensible with empty center)
    std::uint64_t budget = kDefaultEnumBudget;
};

/// Receives each solution with its exact squared distance. A returned value
/// shrinks the search radius (used for closest-point queries).
using EnumSink = std::function<std::optional<Rat>(const IntVec&, const Rat&)>;

/// Walks every solution of the request. Throws BudgetExceeded when the node
/// count passes the budget.
void enumerate_lattice(const LatticeBasis& L, const GramSchmidtData& gso,
                       const EnumRequest& request, const EnumSink& sink);

/// Exact squared distance from an ambient point to the lattice, with a
/// witness coefficient vector of the closest lattice point (full-rank only).
struct ClosestPoint {
    IntVec coeffs;
    Rat dist_sq;
};
ClosestPoint closest_lattice_point(const LatticeBasis& L, const GramSchmidtData& gso,
                                   const RatVec& point,
                                   std::uint64_t budget = kDefaultEnumBudget);

} // namespace latgeo
