#include "latgeo/enumerate.hpp"

#include "latgeo/error.hpp"

#include <cassert>

namespace latgeo {

namespace {

class Walker {
public:
    Walker(const LatticeBasis& L, const GramSchmidtData& gso,
           const EnumRequest& req, const EnumSink& sink)
        : gso_(gso), req_(req), sink_(sink), m_(L.rank()), radius_sq_(req.radius_sq) {
        x_.assign(static_cast<std::size_t>(m_), Int(0));
        shifted_.assign(static_cast<std::size_t>(m_), Rat(0));
        center_ = req.center;
        if (center_.empty())
            center_.assign(static_cast<std::size_t>(m_), Rat(0));
        assert(static_cast<int>(center_.size()) == m_);
        if (!req.parity.empty())
            assert(static_cast<int>(req.parity.size()) == m_);
    }

    void run() {
        if (radius_sq_ < 0)
            return;
        descend(m_ - 1, Rat(0));
    }

private:
    // Projection of the partial assignment onto direction j:
    // t_j = sum_{i > j} mu_{i,j} * (x_i - center_i).
    Rat projection(int level) const {
        Rat t = 0;
        for (int i = level + 1; i < m_; ++i) {
            const Rat& mu = gso_.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)];
            if (mu != 0 && shifted_[static_cast<std::size_t>(i)] != 0)
                t += mu * shifted_[static_cast<std::size_t>(i)];
        }
        return t;
    }

    void spend_node() {
        if (++nodes_ > req_.budget)
            throw BudgetExceeded("enumeration node budget exhausted");
    }

    // Returns the squared contribution of candidate value v at this level, or
    // nullopt when it exceeds the remaining budget `room`.
    std::optional<Rat> contribution(const Int& v, int level, const Rat& t, const Rat& room) {
        spend_node();
        Rat c = Rat(v) - center_[static_cast<std::size_t>(level)] + t;
        Rat g = c * c * gso_.tilde_norms_sq[static_cast<std::size_t>(level)];
        if (g > room)
            return std::nullopt;
        return g;
    }

    void emit_or_descend(int level, const Int& v, const Rat& used_plus_g) {
        x_[static_cast<std::size_t>(level)] = v;
        shifted_[static_cast<std::size_t>(level)] = Rat(v) - center_[static_cast<std::size_t>(level)];
        if (level == 0) {
            if (req_.skip_zero) {
                bool all_zero = true;
                for (const Int& xi : x_)
                    if (xi != 0) {
                        all_zero = false;
                        break;
                    }
                if (all_zero)
                    return;
            }
            if (auto shrink = sink_(x_, used_plus_g))
                if (*shrink < radius_sq_)
                    radius_sq_ = *shrink;
        } else {
            descend(level - 1, used_plus_g);
        }
    }

    void descend(int level, const Rat& used) {
        Rat t = projection(level);
        // The feasible x at this level form a contiguous run (stepped by the
        // parity stride) around the real minimizer center - t.
        Rat minimizer = center_[static_cast<std::size_t>(level)] - t;
        Int step(1);
        Int start = round_half_up(minimizer);
        if (!req_.parity.empty()) {
            step = 2;
            Int want(req_.parity[static_cast<std::size_t>(level)]);
            Int rem = (start - want) % 2;
            if (rem != 0)
                start += (Rat(start) <= minimizer) ? 1 : -1;
        }

        for (Int v = start;; v += step) {
            Rat room = radius_sq_ - used;
            auto g = contribution(v, level, t, room);
            if (!g)
                break;
            emit_or_descend(level, v, used + *g);
        }
        for (Int v = start - step;; v -= step) {
            Rat room = radius_sq_ - used;
            auto g = contribution(v, level, t, room);
            if (!g)
                break;
            emit_or_descend(level, v, used + *g);
        }
    }

    const GramSchmidtData& gso_;
    const EnumRequest& req_;
    const EnumSink& sink_;
    int m_;
    Rat radius_sq_;
    RatVec center_;
    IntVec x_;
    RatVec shifted_; // x_i - center_i for assigned levels
    std::uint64_t nodes_ = 0;
};

} // namespace

void enumerate_lattice(const LatticeBasis& L, const GramSchmidtData& gso,
                       const EnumRequest& request, const EnumSink& sink) {
    Walker(L, gso, request, sink).run();
}

ClosestPoint closest_lattice_point(const LatticeBasis& L, const GramSchmidtData& gso,
                                   const RatVec& point, std::uint64_t budget) {
    RatVec coords = L.basis_coordinates(point);
    // Babai rounding gives the starting radius; the walk shrinks it whenever
    // a closer point turns up.
    IntVec rounded(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        rounded[i] = round_half_up(coords[i]);
    RatVec diff = L.image(rounded);
    for (std::size_t j = 0; j < diff.size(); ++j)
        diff[j] -= point[j];
    ClosestPoint best{rounded, norm_sq(diff)};

    EnumRequest req;
    req.radius_sq = best.dist_sq;
    req.center = coords;
    req.skip_zero = false;
    req.budget = budget;
    enumerate_lattice(L, gso, req, [&](const IntVec& x, const Rat& d_sq) -> std::optional<Rat> {
        if (d_sq < best.dist_sq || (d_sq == best.dist_sq && x < best.coeffs)) {
            best.coeffs = x;
            best.dist_sq = d_sq;
        }
        return d_sq;
    });
    return best;
}

} // namespace latgeo
