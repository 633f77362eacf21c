#include "latgeo/voronoi.hpp"

#include "latgeo/enumerate.hpp"
#include "latgeo/minima.hpp"
#include "latgeo/packing.hpp"

#include <cmath>

namespace latgeo {

namespace {

bool canonical_sign(const IntVec& x) {
    for (const Int& v : x) {
        if (v > 0)
            return true;
        if (v < 0)
            return false;
    }
    return false;
}

IntVec negated(const IntVec& x) {
    IntVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = -x[i];
    return out;
}

} // namespace

RelevantVectorSet relevant_vectors(const LatticeBasis& L, std::uint64_t budget) {
    if (!L.complete())
        throw NotFullRank("relevant vectors need a full-rank lattice");
    int n = L.rank();
    if (n > 6)
        throw DimensionTooLarge("relevant vectors are guarded to dimension <= 6");

    auto gso = gram_schmidt(L);
    RelevantVectorSet out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> coset(static_cast<std::size_t>(n));
        IntVec rep(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            coset[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            rep[static_cast<std::size_t>(i)] = coset[static_cast<std::size_t>(i)];
        }
        // The coset representative itself bounds the coset minimum.
        Rat start_sq = norm_sq(L.image(rep));

        EnumRequest req;
        req.radius_sq = start_sq;
        req.parity = coset;
        req.skip_zero = false; // zero is not in a nonzero coset anyway
        req.budget = budget;

        std::optional<Rat> min_sq;
        std::vector<IntVec> minimizers; // canonical representatives
        enumerate_lattice(L, gso, req, [&](const IntVec& x, const Rat& sq) -> std::optional<Rat> {
            if (!min_sq || sq < *min_sq) {
                min_sq = sq;
                minimizers.clear();
            }
            if (sq == *min_sq) {
                IntVec canon = canonical_sign(x) ? x : negated(x);
                bool seen = false;
                for (const auto& m : minimizers)
                    if (m == canon) {
                        seen = true;
                        break;
                    }
                if (!seen)
                    minimizers.push_back(std::move(canon));
            }
            return *min_sq; // shrink the ball to the running minimum
        });

        if (minimizers.size() == 1) {
            RelevantVector rv;
            rv.coeffs = minimizers.front();
            rv.vector = L.image(rv.coeffs);
            rv.norm_sq = *min_sq;
            rv.coset = coset;
            out.vectors.push_back(std::move(rv));
        }
    }
    return out;
}

bool in_voronoi_cell(const RatVec& x, const LatticeBasis& L, std::uint64_t budget) {
    if (static_cast<int>(x.size()) != L.ambient_dim())
        throw ShapeMismatch("point dimension differs from ambient dimension");
    auto relevant = relevant_vectors(L, budget);
    for (const auto& rv : relevant.vectors) {
        Rat ip = dot(x, rv.vector);
        if (ip < 0)
            ip = -ip;
        if (2 * ip > rv.norm_sq)
            return false;
    }
    return true;
}

RadiusReport radius_report(const LatticeBasis& L, std::optional<int> grid_per_axis,
                           std::uint64_t budget) {
    if (!L.complete())
        throw NotFullRank("radius report needs a full-rank lattice");
    int n = L.rank();
    if (n > 6)
        throw DimensionTooLarge("radius report is guarded to dimension <= 6");

    auto minima = successive_minima(L, budget);
    RadiusReport out;
    out.packing_radius_sq = minima.lambda_sq.front() / 4;
    out.covering_lower_sq = minima.lambda_sq.back() / 4;
    out.covering_upper_sq = Rat(n) * minima.lambda_sq.back() / 4;
    double det_tau = std::sqrt(rat_d(L.det_squared()));
    double vn = ball_volume(n, 1.0);
    out.covering_lower_volumetric_sq = std::pow(det_tau / vn, 2.0 / n);
    if (grid_per_axis)
        out.covering_estimate = covering_radius_estimate(L, *grid_per_axis, budget);
    return out;
}

double covering_radius_estimate(const LatticeBasis& L, int grid_per_axis,
                                std::uint64_t budget) {
    if (!L.complete())
        throw NotFullRank("covering estimate needs a full-rank lattice");
    int n = L.rank();
    if (n > 3)
        throw DimensionTooLarge("covering estimate is guarded to dimension <= 3");
    if (grid_per_axis < 1)
        throw NotDefined("grid must have at least one point per axis");

    auto gso = gram_schmidt(L);
    Rat worst_sq = 0;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        RatVec point(static_cast<std::size_t>(L.ambient_dim()), Rat(0));
        for (int i = 0; i < n; ++i) {
            Rat t(idx[static_cast<std::size_t>(i)], grid_per_axis);
            t.canonicalize();
            for (int j = 0; j < L.ambient_dim(); ++j)
                point[static_cast<std::size_t>(j)] += t * L.row(i)[static_cast<std::size_t>(j)];
        }
        Rat d_sq = closest_lattice_point(L, gso, point, budget).dist_sq;
        if (d_sq > worst_sq)
            worst_sq = d_sq;

        int lvl = 0;
        while (lvl < n) {
            if (++idx[static_cast<std::size_t>(lvl)] < grid_per_axis)
                break;
            idx[static_cast<std::size_t>(lvl)] = 0;
            ++lvl;
        }
        if (lvl == n)
            break;
    }
    return std::sqrt(rat_d(worst_sq));
}

} // namespace latgeo
