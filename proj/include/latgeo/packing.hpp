#pragma once

#include "latgeo/lattice.hpp"

#include <optional>
#include <utility>

namespace latgeo {

struct HermiteBoundSet {
    int n = 0;
    std::optional<Rat> exact_gamma_n_pow_n; // present iff 1 <= n <= 8
    double blichfeldt_upper = 0;
    double kitaoka_upper = 0;
    double asymptotic_lower = 0;            // n/(2*pi*e)
    double asymptotic_upper = 0;            // 1.744*n/(2*pi*e)
    double asymptotic_lower_log_refined = 0; // n/(2*pi*e) + log(pi*n)/(2*pi*e)
    double approx = 0;                      // n/(2*pi*e)
};

/// Euclidean d-ball volume pi^(d/2)/Gamma(d/2+1) * R^d; the gamma factor is
/// evaluated by the half-integer recurrence.
double ball_volume(int d, double radius);

/// v_d(1)^2 as an exact rational multiple of a power of pi:
/// returns (coeff, p) with v_d^2 = coeff * pi^p (p = 2*floor(d/2)).
std::pair<Rat, unsigned> ball_volume_sq_decomposition(int d);

/// Exact gamma_n^n for 1 <= n <= 8; OutOfTable otherwise.
Rat hermite_exact(int n);

HermiteBoundSet hermite_bounds(int n);

/// lambda_1^2 / det(tau)^(2/n); exact inputs, float only at the final root.
double hermite_invariant(const LatticeBasis& L);

/// Ball of diameter lambda_1 over the fundamental-domain volume; in (0, 1].
double packing_density(const LatticeBasis& L);

/// zeta(n) / 2^(n-1); the zeta value is certified to absolute error < 1e-12.
double minkowski_hlawka_bound(int n);

} // namespace latgeo
