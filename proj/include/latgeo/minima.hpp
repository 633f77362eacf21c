#pragma once

#include "latgeo/enumerate.hpp"
#include "latgeo/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latgeo {

enum class Norm { L2, Linf };

/// All nonzero coefficient vectors x with ||x A||^2 <= r_sq (L2) or
/// max_i (x A)_i^2 <= r_sq (Linf), one representative per +-pair with the
/// first nonzero coefficient positive, sorted lexicographically.
std::vector<IntVec> enumerate_below(const LatticeBasis& L, const Rat& r_sq, Norm norm,
                                    std::uint64_t budget = kDefaultEnumBudget);

struct ShortestVectorResult {
    IntVec coeffs;
    RatVec vector;
    Rat lambda1_sq; // squared length in the requested norm
};

ShortestVectorResult shortest_vector(const LatticeBasis& L, Norm norm = Norm::L2,
                                     std::uint64_t budget = kDefaultEnumBudget);

struct MinimaReport {
    std::vector<Rat> lambda_sq;      // nondecreasing
    std::vector<IntVec> witnesses;   // independent images achieving each minimum
};

/// Successive minima by greedy scan of the enumeration with a growing radius
/// (starting at the convex-body first-minimum bound, doubling on failure).
MinimaReport successive_minima(const LatticeBasis& L,
                               std::uint64_t budget = kDefaultEnumBudget);

struct BoundCheck {
    std::string name;
    std::string relation; // "<=" or ">="; the inequality reads lhs REL rhs
    double lhs = 0;
    double rhs = 0;
    bool exact_verdict = false;
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    Rat lambda1_sq;
    Rat lambda1_linf_sq;
    std::vector<Rat> lambda_sq;
    Rat det_sq;
    Rat gso_min_sq;
    // The sharp-variant second-theorem lower constant (n^(1/n) in place of
    // (n!)^(1/n)) is strictly stronger than the provable one and fails on
    // near-orthogonal lattices of rank >= 3; its verdict is reported but kept
    // out of the theorem gate.
    bool sharp_lower_discrepancy = false;
};

/// Evaluates the first-theorem family and the second-theorem sandwich with
/// exact verdicts (integer-power cross-multiplication; a certified rational
/// pi enclosure for the ball-volume form). Floats appear only as display
/// shadows.
BoundReport bounds_report(const LatticeBasis& L,
                          std::uint64_t budget = kDefaultEnumBudget);

} // namespace latgeo
