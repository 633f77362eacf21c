#include "latgeo/minima.hpp"

#include "latgeo/packing.hpp"

#include <algorithm>
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
    return false; // zero vector, not canonical
}

// Exact rational radius dominating the first-minimum convex-body bound
// lambda_1^2 <= n * det(A^T A)^(1/n), so the first enumeration pass is
// guaranteed nonempty.
Rat first_minimum_radius_sq(const LatticeBasis& L) {
    unsigned n = static_cast<unsigned>(L.rank());
    return Rat(n) * upper_nth_root(L.det_squared(), n);
}

// Same for the sup-norm variant: (lambda_1^inf)^2 <= det(A^T A)^(1/n) in the
// full-rank case. Otherwise fall back on the Euclidean bound, which dominates
// the sup-norm length.
Rat linf_first_minimum_radius_sq(const LatticeBasis& L) {
    if (L.complete())
        return upper_nth_root(L.det_squared(), static_cast<unsigned>(L.rank()));
    return first_minimum_radius_sq(L);
}

std::vector<IntVec> collect_below(const LatticeBasis& L, const GramSchmidtData& gso,
                                  const Rat& r_sq, std::uint64_t budget) {
    std::vector<IntVec> out;
    EnumRequest req;
    req.radius_sq = r_sq;
    req.skip_zero = true;
    req.budget = budget;
    enumerate_lattice(L, gso, req, [&](const IntVec& x, const Rat&) -> std::optional<Rat> {
        if (canonical_sign(x))
            out.push_back(x);
        return std::nullopt;
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<IntVec> enumerate_below(const LatticeBasis& L, const Rat& r_sq, Norm norm,
                                    std::uint64_t budget) {
    if (r_sq <= 0)
        throw NotDefined("enumeration radius must be positive");
    auto gso = gram_schmidt(L);
    if (norm == Norm::L2)
        return collect_below(L, gso, r_sq, budget);
    // Sup-norm ball of radius r sits inside the Euclidean ball of radius
    // sqrt(n) * r; enumerate that and filter exactly.
    Rat l2_radius = Rat(L.ambient_dim()) * r_sq;
    auto candidates = collect_below(L, gso, l2_radius, budget);
    std::vector<IntVec> out;
    for (auto& x : candidates)
        if (linf_norm_sq(L.image(x)) <= r_sq)
            out.push_back(std::move(x));
    return out;
}

ShortestVectorResult shortest_vector(const LatticeBasis& L, Norm norm, std::uint64_t budget) {
    Rat r_sq = norm == Norm::L2 ? first_minimum_radius_sq(L) : linf_first_minimum_radius_sq(L);
    auto candidates = enumerate_below(L, r_sq, norm, budget);
    // Nonempty by the convex-body bound backing r_sq.
    const IntVec* best = nullptr;
    Rat best_sq;
    for (const auto& x : candidates) {
        RatVec v = L.image(x);
        Rat sq = norm == Norm::L2 ? norm_sq(v) : linf_norm_sq(v);
        if (!best || sq < best_sq || (sq == best_sq && x < *best)) {
            best = &x;
            best_sq = sq;
        }
    }
    ShortestVectorResult out;
    out.coeffs = *best;
    out.vector = L.image(out.coeffs);
    out.lambda1_sq = best_sq;
    return out;
}

MinimaReport successive_minima(const LatticeBasis& L, std::uint64_t budget) {
    if (L.rank() > 8)
        throw DimensionTooLarge("successive minima are guarded to rank <= 8");
    int m = L.rank();
    auto gso = gram_schmidt(L);
    Rat r_sq = first_minimum_radius_sq(L);
    for (;;) {
        auto vecs = collect_below(L, gso, r_sq, budget);
        struct Entry {
            Rat norm_sq;
            const IntVec* coeffs;
            RatVec image;
        };
        std::vector<Entry> entries;
        entries.reserve(vecs.size());
        for (const auto& x : vecs) {
            RatVec img = L.image(x);
            entries.push_back({norm_sq(img), &x, std::move(img)});
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.norm_sq != b.norm_sq)
                return a.norm_sq < b.norm_sq;
            return *a.coeffs < *b.coeffs;
        });
        MinimaReport report;
        RankTracker tracker;
        for (const auto& e : entries) {
            if (tracker.try_add(e.image)) {
                report.lambda_sq.push_back(e.norm_sq);
                report.witnesses.push_back(*e.coeffs);
                if (tracker.rank() == m)
                    return report;
            }
        }
        r_sq *= 2;
    }
}

namespace {

Rat rat_pow(Rat base, unsigned e) {
    Rat out = 1;
    while (e) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// Certified comparison coeff * pi^p <= bound using the rational pi enclosure.
// p is even and small; the enclosure is ~50 digits, far beyond anything a
// desk-scale lattice can straddle.
bool pi_power_le(const Rat& coeff, unsigned p, const Rat& bound) {
    if (p == 0)
        return coeff <= bound;
    if (coeff <= 0)
        return true;
    Rat hi = coeff * rat_pow(pi_upper(), p);
    if (hi <= bound)
        return true;
    Rat lo = coeff * rat_pow(pi_lower(), p);
    if (lo > bound)
        return false;
    throw std::logic_error("pi enclosure too coarse to decide comparison");
}

} // namespace

BoundReport bounds_report(const LatticeBasis& L, std::uint64_t budget) {
    if (!L.complete())
        throw NotFullRank("bound report needs a full-rank lattice");
    if (L.ambient_dim() > 8)
        throw DimensionTooLarge("bound report is guarded to dimension <= 8");

    unsigned n = static_cast<unsigned>(L.rank());
    BoundReport rep;
    rep.det_sq = L.det_squared();
    rep.gso_min_sq = gso_min_norm_sq(L);
    auto minima = successive_minima(L, budget);
    rep.lambda_sq = minima.lambda_sq;
    rep.lambda1_sq = minima.lambda_sq.front();
    rep.lambda1_linf_sq = shortest_vector(L, Norm::Linf, budget).lambda1_sq;

    double det_tau = std::sqrt(rat_d(rep.det_sq));
    double det_root = std::pow(det_tau, 1.0 / n);
    double lambda1 = std::sqrt(rat_d(rep.lambda1_sq));
    double lambda1_linf = std::sqrt(rat_d(rep.lambda1_linf_sq));

    // lambda_1 >= min ||tilde_a_i||
    rep.checks.push_back({"gso_lower_bound", ">=", lambda1, std::sqrt(rat_d(rep.gso_min_sq)),
                          rep.lambda1_sq >= rep.gso_min_sq});

    // lambda_1 <= sqrt(n) det^(1/n)  <=>  lambda_1^(2n) <= n^n det(A^T A)
    Rat nn = rat_pow(Rat(n), n);
    rep.checks.push_back({"minkowski_first", "<=", lambda1,
                          std::sqrt(static_cast<double>(n)) * det_root,
                          rat_pow(rep.lambda1_sq, n) <= nn * rep.det_sq});

    // sup-norm: lambda_1^inf <= det^(1/n)
    rep.checks.push_back({"minkowski_first_supnorm", "<=", lambda1_linf, det_root,
                          rat_pow(rep.lambda1_linf_sq, n) <= rep.det_sq});

    // ball-volume form: lambda_1 <= 2 (det(tau)/v_n)^(1/n)
    // <=> lambda_1^(2n) * v_n^2 <= 4^n det(A^T A), with v_n^2 = Q * pi^p.
    auto [vol_coeff, vol_pi_pow] = ball_volume_sq_decomposition(static_cast<int>(n));
    bool ball_bound_holds = pi_power_le(rat_pow(rep.lambda1_sq, n) * vol_coeff, vol_pi_pow,
                            rat_pow(Rat(4), n) * rep.det_sq);
    rep.checks.push_back({"ball_volume_bound", "<=", lambda1,
                          2.0 * std::pow(det_tau / ball_volume(static_cast<int>(n), 1.0), 1.0 / n),
                          ball_bound_holds});

    // Second-theorem sandwich. The proof-backed lower constant is
    // n^(n/2)/n! * det; both sides exact via squared products.
    Rat prod_lambda_sq = 1;
    for (const Rat& lsq : rep.lambda_sq)
        prod_lambda_sq *= lsq;
    double geo_mean = std::pow(rat_d(prod_lambda_sq), 1.0 / (2.0 * n));
    Rat factorial = 1;
    for (unsigned k = 2; k <= n; ++k)
        factorial *= Rat(k);

    double sqrt_n = std::sqrt(static_cast<double>(n));
    rep.checks.push_back({"minkowski_second_lower", ">=", geo_mean,
                          sqrt_n * det_root / std::pow(rat_d(factorial), 1.0 / n),
                          factorial * factorial * prod_lambda_sq >= nn * rep.det_sq});
    rep.checks.push_back({"minkowski_second_upper", "<=", geo_mean, sqrt_n * det_root,
                          prod_lambda_sq <= nn * rep.det_sq});

    // Variant lower constant with n^(1/n) in place of (n!)^(1/n): stronger
    // than the provable one and false for near-orthogonal lattices of rank
    // >= 3. Recorded for diagnostics, never gated on.
    bool sharp_holds = Rat(n) * Rat(n) * prod_lambda_sq >= nn * rep.det_sq;
    rep.checks.push_back({"minkowski_second_lower_sharp", ">=", geo_mean,
                          sqrt_n * det_root / std::pow(static_cast<double>(n), 1.0 / n),
                          sharp_holds});
    rep.sharp_lower_discrepancy = !sharp_holds;

    return rep;
}

} // namespace latgeo
