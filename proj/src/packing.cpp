#include "latgeo/packing.hpp"

#include "latgeo/minima.hpp"

#include <array>
#include <cmath>

namespace latgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// Gamma at integer or half-integer arguments, by recurrence from
// Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double gamma_half_integer(int twice_x) {
    if (twice_x <= 0)
        throw NotDefined("gamma needs a positive argument");
    double g;
    int t;
    if (twice_x % 2 == 0) {
        g = 1.0; // Gamma(1)
        t = 2;
    } else {
        g = std::sqrt(kPi); // Gamma(1/2)
        t = 1;
    }
    for (; t + 2 <= twice_x; t += 2)
        g *= t / 2.0;
    return g;
}

} // namespace

double ball_volume(int d, double radius) {
    if (d < 1)
        throw NotDefined("ball volume needs dimension >= 1");
    if (radius <= 0)
        throw NotDefined("ball volume needs a positive radius");
    return std::pow(kPi, d / 2.0) / gamma_half_integer(d + 2) * std::pow(radius, d);
}

std::pair<Rat, unsigned> ball_volume_sq_decomposition(int d) {
    if (d < 1)
        throw NotDefined("ball volume needs dimension >= 1");
    // v_d = pi^(d/2) / Gamma(d/2+1). Squared, the gamma factor is rational:
    // even d = 2k:   v_d^2 = pi^(2k) / (k!)^2
    // odd  d = 2k+1: Gamma(k+3/2) = sqrt(pi) (2k+2)! / (4^(k+1) (k+1)!),
    //                v_d^2 = pi^(2k) * (4^(k+1) (k+1)! / (2k+2)!)^2
    if (d % 2 == 0) {
        int k = d / 2;
        Rat kf = 1;
        for (int i = 2; i <= k; ++i)
            kf *= i;
        return {Rat(1) / (kf * kf), static_cast<unsigned>(d)};
    }
    int k = (d - 1) / 2;
    Rat num = 1;
    for (int i = 0; i < k + 1; ++i)
        num *= 4;
    for (int i = 2; i <= k + 1; ++i)
        num *= i;
    Rat den = 1;
    for (int i = 2; i <= 2 * k + 2; ++i)
        den *= i;
    Rat q = num / den;
    return {q * q, static_cast<unsigned>(2 * k)};
}

Rat hermite_exact(int n) {
    static const std::array<Rat, 8> table = {
        Rat(1), Rat(4, 3), Rat(2), Rat(4), Rat(8), Rat(64, 3), Rat(64), Rat(256)};
    if (n < 1 || n > 8)
        throw OutOfTable("exact Hermite values cover dimensions 1..8");
    return table[static_cast<std::size_t>(n - 1)];
}

HermiteBoundSet hermite_bounds(int n) {
    if (n < 1)
        throw NotDefined("Hermite bounds need dimension >= 1");
    HermiteBoundSet out;
    out.n = n;
    if (n <= 8)
        out.exact_gamma_n_pow_n = hermite_exact(n);
    out.blichfeldt_upper =
        (2.0 / kPi) * std::pow(gamma_half_integer(n + 4), 2.0 / n);
    out.kitaoka_upper = std::pow(4.0 / 3.0, (n - 1) / 2.0);
    double two_pi_e = 2.0 * kPi * kE;
    out.asymptotic_lower = n / two_pi_e;
    out.asymptotic_upper = 1.744 * n / two_pi_e;
    out.asymptotic_lower_log_refined = n / two_pi_e + std::log(kPi * n) / two_pi_e;
    out.approx = n / two_pi_e;
    return out;
}

double hermite_invariant(const LatticeBasis& L) {
    if (!L.complete())
        throw NotFullRank("Hermite invariant needs a full-rank lattice");
    Rat lambda1_sq = shortest_vector(L, Norm::L2).lambda1_sq;
    return rat_d(lambda1_sq) / std::pow(rat_d(L.det_squared()), 1.0 / L.rank());
}

double packing_density(const LatticeBasis& L) {
    if (!L.complete())
        throw NotFullRank("packing density needs a full-rank lattice");
    Rat lambda1_sq = shortest_vector(L, Norm::L2).lambda1_sq;
    double radius = std::sqrt(rat_d(lambda1_sq)) / 2.0;
    return ball_volume(L.rank(), radius) / std::sqrt(rat_d(L.det_squared()));
}

namespace {

// zeta(s) for integer s >= 2 by direct series with an Euler-Maclaurin tail;
// with N = 100 and three Bernoulli terms the dropped term is < 1e-15 for all
// s >= 2, well inside the certified 1e-12.
double zeta_int(int s) {
    constexpr int N = 100;
    double sum = 0;
    for (int k = 1; k < N; ++k)
        sum += std::pow(k, -s);
    double Ns = std::pow(N, -s);
    sum += Ns * N / (s - 1.0); // integral tail N^(1-s)/(s-1)
    sum += Ns / 2.0;
    double term = static_cast<double>(s) * Ns / N / 12.0; // B2/2! s N^(-s-1)
    sum += term;
    term = -std::pow(N, -s - 3) * s * (s + 1.0) * (s + 2.0) / 720.0;
    sum += term;
    term = std::pow(N, -s - 5) * s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0;
    sum += term;
    return sum;
}

} // namespace

double minkowski_hlawka_bound(int n) {
    if (n < 2)
        throw NotDefined("the density bound needs dimension >= 2 (zeta diverges at 1)");
    return zeta_int(n) / std::pow(2.0, n - 1);
}

} // namespace latgeo
