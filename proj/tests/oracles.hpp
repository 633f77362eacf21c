#pragma once

// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the pruned-search code paths they are checking.

#include "latgeo/gso.hpp"
#include "latgeo/lattice.hpp"
#include "latgeo/matrix.hpp"
#include "latgeo/minima.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace latgeo::testing {

/// Cofactor-expansion determinant (small square matrices only).
inline Rat cofactor_det(const RatMat& a) {
    std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Rat det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        RatMat minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            RatVec row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Rat term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline bool oracle_canonical_sign(const IntVec& x) {
    for (const Int& v : x) {
        if (v > 0)
            return true;
        if (v < 0)
            return false;
    }
    return false;
}

inline IntVec oracle_negate(const IntVec& x) {
    IntVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = -x[i];
    return out;
}

/// Plain box scan: coefficient bounds derived from the orthogonalized norms
/// (|c_j| <= sqrt(r^2/B_j), back-substituted through the mu's) intersected,
/// in the full-rank case, with the inverse-column bound |x_j| <= r *
/// ||col_j(A^-1)||. Every candidate in the box is checked by computing its
/// exact norm.
inline std::vector<IntVec> box_enumerate_below(const LatticeBasis& L, const Rat& r_sq,
                                               Norm norm) {
    auto gso = gram_schmidt(L);
    int m = L.rank();
    Rat tree_radius = norm == Norm::L2 ? r_sq : Rat(L.ambient_dim()) * r_sq;

    std::vector<Int> bound(static_cast<std::size_t>(m));
    for (int j = m - 1; j >= 0; --j) {
        Rat c_bound_sq = tree_radius / gso.tilde_norms_sq[static_cast<std::size_t>(j)];
        Rat b = Rat(ceil_nth_root_int(c_bound_sq, 2));
        for (int i = j + 1; i < m; ++i) {
            Rat mu = gso.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (mu < 0)
                mu = -mu;
            b += mu * Rat(bound[static_cast<std::size_t>(i)]);
        }
        bound[static_cast<std::size_t>(j)] = ceil_rat(b);
    }
    if (L.complete()) {
        RatMat a(static_cast<std::size_t>(m), RatVec(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    L.row(i)[static_cast<std::size_t>(j)];
        auto inv = invert(a);
        for (int j = 0; j < m; ++j) {
            Rat col_sq = 0;
            for (int i = 0; i < m; ++i) {
                const Rat& v = (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                col_sq += v * v;
            }
            Int alt = ceil_nth_root_int(tree_radius * col_sq, 2);
            if (alt < bound[static_cast<std::size_t>(j)])
                bound[static_cast<std::size_t>(j)] = alt;
        }
    }

    std::vector<IntVec> out;
    IntVec x(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int level) -> void {
        if (level < 0) {
            bool zero = true;
            for (const Int& v : x)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (zero || !oracle_canonical_sign(x))
                return;
            RatVec img = L.image(x);
            Rat sq = norm == Norm::L2 ? norm_sq(img) : linf_norm_sq(img);
            if (sq <= r_sq)
                out.push_back(x);
            return;
        }
        Int b = bound[static_cast<std::size_t>(level)];
        for (Int v = -b; v <= b; ++v) {
            x[static_cast<std::size_t>(level)] = v;
            self(self, level - 1);
        }
    };
    rec(rec, m - 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Largest radius at or below r0_sq whose oracle box stays affordable: the
/// box around a skewed lattice's ball is exponentially larger than the ball
/// itself, so the scan halves the radius until the candidate count fits the
/// work cap. Deterministic, and keeps the full radius on well-conditioned
/// input.
inline Rat oracle_radius_for(const LatticeBasis& L, const Rat& r0_sq,
                             double work_cap = 300000.0) {
    auto gso = gram_schmidt(L);
    int m = L.rank();
    RatMat a(static_cast<std::size_t>(m), RatVec(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                L.row(i)[static_cast<std::size_t>(j)];
    auto inv = invert(a);
    Rat r_sq = r0_sq;
    for (;;) {
        double work = 1;
        for (int j = 0; j < m; ++j) {
            Rat col_sq = 0;
            for (int i = 0; i < m; ++i) {
                const Rat& v = (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                col_sq += v * v;
            }
            work *= 2 * std::sqrt(rat_d(r_sq * col_sq)) + 1;
        }
        if (work <= work_cap)
            return r_sq;
        r_sq /= 2;
    }
}

/// Integer coefficients of v in L, if v is a lattice member.
inline std::optional<IntVec> lattice_coefficients(const LatticeBasis& L, const RatVec& v) {
    int m = L.rank();
    RatVec rhs(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        rhs[static_cast<std::size_t>(k)] = dot(L.row(k), v);
    auto c = solve_linear(L.gram(), rhs);
    if (!c)
        return std::nullopt;
    IntVec coeffs(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (!is_integral((*c)[static_cast<std::size_t>(k)]))
            return std::nullopt;
        coeffs[static_cast<std::size_t>(k)] = (*c)[static_cast<std::size_t>(k)].get_num();
    }
    RatVec img = L.image(coeffs);
    if (img != v)
        return std::nullopt;
    return coeffs;
}

/// Coset scan for relevant vectors: bucket every short vector by its parity
/// class and keep the classes with a unique minimal +- pair.
struct CosetMinimum {
    Rat min_sq;
    std::vector<IntVec> minimizers; // canonical representatives
};

inline std::map<std::vector<int>, CosetMinimum> coset_minima_bruteforce(const LatticeBasis& L) {
    int n = L.rank();
    // Enumerate far enough to include every coset representative's norm.
    Rat radius = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IntVec rep(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            rep[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        Rat sq = norm_sq(L.image(rep));
        if (sq > radius)
            radius = sq;
    }
    auto vecs = box_enumerate_below(L, radius, Norm::L2);
    std::map<std::vector<int>, CosetMinimum> buckets;
    for (const auto& x : vecs) {
        std::vector<int> parity(x.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            parity[i] = static_cast<int>(mpz_tstbit(x[i].get_mpz_t(), 0));
            if (parity[i])
                nonzero = true;
        }
        if (!nonzero)
            continue; // even coset: not a nonzero class of tau/2tau
        Rat sq = norm_sq(L.image(x));
        auto it = buckets.find(parity);
        if (it == buckets.end()) {
            buckets.emplace(parity, CosetMinimum{sq, {x}});
        } else if (sq < it->second.min_sq) {
            it->second.min_sq = sq;
            it->second.minimizers = {x};
        } else if (sq == it->second.min_sq) {
            it->second.minimizers.push_back(x);
        }
    }
    return buckets;
}

/// a <= b with a^2 + b^2 = p, by direct scan.
inline std::optional<std::pair<std::int64_t, std::int64_t>>
two_squares_scan(std::int64_t p) {
    for (std::int64_t a = 0; a * a * 2 <= p; ++a) {
        std::int64_t rest = p - a * a;
        auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        for (std::int64_t cand = std::max<std::int64_t>(0, b - 2); cand <= b + 2; ++cand)
            if (cand * cand == rest)
                return std::make_pair(a, cand);
    }
    return std::nullopt;
}

/// Nonincreasing quadruple with sum of squares x, by bounded scan.
inline std::optional<std::array<std::int64_t, 4>> four_squares_scan(std::int64_t x) {
    for (std::int64_t a = 0; a * a <= x; ++a)
        for (std::int64_t b = a; a * a + b * b <= x; ++b)
            for (std::int64_t c = b; a * a + b * b + c * c <= x; ++c) {
                std::int64_t rest = x - a * a - b * b - c * c;
                auto d = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
                for (std::int64_t cand = std::max(c, d - 2); cand <= d + 2; ++cand)
                    if (cand * cand == rest)
                        return std::array<std::int64_t, 4>{cand, c, b, a};
            }
    return std::nullopt;
}

} // namespace latgeo::testing
