#pragma once

#include "latgeo/lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace latgeo::testing {

// All draws go through mt19937 output directly (modulo reduction) so the
// corpus is identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint32_t>(hi - lo + 1));
    }

    std::uint32_t raw() { return gen_(); }

private:
    std::mt19937 gen_;
};

/// Random full-rank integer lattices, dimensions cycling over
/// [dim_lo, dim_hi], entries uniform in [-entry_abs, entry_abs].
inline std::vector<LatticeBasis> random_corpus(int count, int dim_lo, int dim_hi,
                                               int entry_abs, std::uint32_t seed) {
    Rng rng(seed);
    std::vector<LatticeBasis> out;
    out.reserve(static_cast<std::size_t>(count));
    int span = dim_hi - dim_lo + 1;
    for (int i = 0; i < count; ++i) {
        int dim = dim_lo + (i % span);
        for (;;) {
            std::vector<RatVec> rows(static_cast<std::size_t>(dim),
                                     RatVec(static_cast<std::size_t>(dim)));
            for (auto& row : rows)
                for (auto& v : row)
                    v = Rat(rng.uniform(-entry_abs, entry_abs));
            try {
                out.push_back(make_lattice(std::move(rows)));
                break;
            } catch (const DependentRows&) {
                // resample
            }
        }
    }
    return out;
}

/// Random full-rank lattices with rational entries (denominators up to
/// den_max).
inline std::vector<LatticeBasis> random_rational_corpus(int count, int dim_lo, int dim_hi,
                                                        int entry_abs, int den_max,
                                                        std::uint32_t seed) {
    Rng rng(seed);
    std::vector<LatticeBasis> out;
    out.reserve(static_cast<std::size_t>(count));
    int span = dim_hi - dim_lo + 1;
    for (int i = 0; i < count; ++i) {
        int dim = dim_lo + (i % span);
        for (;;) {
            std::vector<RatVec> rows(static_cast<std::size_t>(dim),
                                     RatVec(static_cast<std::size_t>(dim)));
            for (auto& row : rows)
                for (auto& v : row) {
                    v = Rat(rng.uniform(-entry_abs, entry_abs), rng.uniform(1, den_max));
                    v.canonicalize();
                }
            try {
                out.push_back(make_lattice(std::move(rows)));
                break;
            } catch (const DependentRows&) {
                // resample
            }
        }
    }
    return out;
}

/// Random integer matrix of determinant +-1, built from elementary row
/// operations on the identity.
inline IntMat random_unimodular(int dim, int passes, Rng& rng) {
    IntMat u(static_cast<std::size_t>(dim), IntVec(static_cast<std::size_t>(dim), Int(0)));
    for (int i = 0; i < dim; ++i)
        u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int pass = 0; pass < passes; ++pass) {
        int op = rng.uniform(0, 2);
        int i = rng.uniform(0, dim - 1);
        int j = rng.uniform(0, dim - 1);
        if (op == 0 && i != j) {
            Int c(rng.uniform(-3, 3));
            for (int k = 0; k < dim; ++k)
                u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                    c * u[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        } else if (op == 1 && i != j) {
            std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]);
        } else {
            for (int k = 0; k < dim; ++k)
                u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    -u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
    }
    return u;
}

/// Applies an integer row transform to a basis: rows of the result are
/// integer combinations of the input rows.
inline LatticeBasis transformed_basis(const LatticeBasis& L, const IntMat& u) {
    int m = L.rank();
    int n = L.ambient_dim();
    std::vector<RatVec> rows(static_cast<std::size_t>(m),
                             RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Int& c = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    Rat(c) * L.row(k)[static_cast<std::size_t>(j)];
        }
    return make_lattice(std::move(rows));
}

/// Random rational point with entries num/den, num in [-span, span].
inline RatVec random_point(int dim, int span, int den, Rng& rng) {
    RatVec out(static_cast<std::size_t>(dim));
    for (auto& v : out) {
        v = Rat(rng.uniform(-span, span), den);
        v.canonicalize();
    }
    return out;
}

} // namespace latgeo::testing
