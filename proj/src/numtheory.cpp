#include "latgeo/numtheory.hpp"

#include "latgeo/error.hpp"
#include "latgeo/lattice.hpp"
#include "latgeo/minima.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace latgeo {

namespace {

constexpr std::int64_t kFactorGuard = 100'000'000;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(m));
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t sqrt_minus_one_mod_p(std::int64_t p) {
    if (p > kFactorGuard)
        throw DimensionTooLarge("input exceeds the trial-division guard");
    if (p == 2 || p % 4 != 1)
        throw NotApplicable("-1 is a quadratic residue only for p = 1 (mod 4)");
    if (!is_prime(p))
        throw NotPrime("input is not prime");
    // Euler's criterion: for a non-residue g, g^((p-1)/4) squares to -1.
    for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t q = powmod(g, (p - 1) / 4, p);
        if (mulmod(q, q, p) == p - 1)
            return std::min(q, p - q);
    }
    // Unreachable for prime p = 1 (mod 4): half of all g are non-residues.
    throw NotApplicable("no square root of -1 found");
}

TwoSquares two_squares(std::int64_t p) {
    if (p == 2)
        return {2, 1, 1, 1};
    std::int64_t q = sqrt_minus_one_mod_p(p); // validates primality and p mod 4
    LatticeBasis L = make_lattice({{Rat(1), Rat(q)}, {Rat(0), Rat(p)}});
    // det(tau) = p and every member's squared norm is divisible by p; the
    // convex-body argument pins the shortest at exactly p. Both facts are
    // checked on every run.
    if (L.det_squared() != Rat(p) * Rat(p))
        throw std::logic_error("two-squares lattice determinant is not p");
    auto sv = shortest_vector(L, Norm::L2);
    if (sv.lambda1_sq != Rat(p))
        throw std::logic_error("two-squares shortest vector does not attain p");
    std::int64_t a = std::abs(sv.vector[0].get_num().get_si());
    std::int64_t b = std::abs(sv.vector[1].get_num().get_si());
    if (a > b)
        std::swap(a, b);
    return {p, a, b, q};
}

Approximant dirichlet_approx(const Rat& alpha, std::int64_t Q) {
    if (Q < 1)
        throw NotDefined("the denominator cap must be at least 1");
    Approximant best;
    best.alpha = alpha;
    best.Q = Q;
    Rat best_err;
    bool have = false;
    for (std::int64_t q = 1; q <= Q; ++q) {
        Rat qa = alpha * Rat(q);
        Int p = round_half_up(qa);
        Rat err = qa - Rat(p);
        if (err < 0)
            err = -err;
        if (!have || err < best_err) {
            best.p = p;
            best.q = q;
            best_err = err;
            have = true;
            if (err == 0)
                break;
        }
    }
    // The pigeonhole guarantee: some q <= Q has |q*alpha - p| <= 1/(Q+1).
    if (best_err * Rat(Q) > 1)
        throw std::logic_error("approximation bound violated");
    return best;
}

std::array<std::int64_t, 4>
euler_four_square_product(const std::array<std::int64_t, 4>& a,
                          const std::array<std::int64_t, 4>& b) {
    return {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3],
        a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] - a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] - a[3] * b[0],
    };
}

std::pair<std::int64_t, std::int64_t> yz_witness(std::int64_t p) {
    if (!is_prime(p) || p == 2)
        throw NotPrime("an odd prime is required");
    std::int64_t half = (p - 1) / 2;
    // S2 = {-z^2 - 1 mod p}, keyed by residue, keeping the smallest z.
    std::unordered_map<std::int64_t, std::int64_t> s2;
    s2.reserve(static_cast<std::size_t>(half + 1));
    for (std::int64_t z = 0; z <= half; ++z) {
        std::int64_t r = (p - 1 - mulmod(z, z, p)) % p;
        s2.emplace(r, z); // first insert wins: smallest z
    }
    for (std::int64_t y = 0; y <= half; ++y) {
        auto it = s2.find(mulmod(y, y, p));
        if (it != s2.end())
            return {y, it->second};
    }
    // Unreachable: |S1| = |S2| = (p+1)/2 forces an intersection.
    throw NotPrime("no witness found");
}

namespace {

FourSquares canonical_four(std::int64_t x, std::array<std::int64_t, 4> parts) {
    for (auto& v : parts)
        v = std::abs(v);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return {x, parts};
}

// Quaternary lattice route for odd prime x: rows span all integer vectors
// whose squared norm is divisible by x, and the ball of squared radius 2x
// contains one of norm exactly x. Results are memoized: composite inputs
// revisit the same primes over and over.
std::array<std::int64_t, 4> four_squares_prime_uncached(std::int64_t x) {
    auto [y, z] = yz_witness(x);
    std::vector<RatVec> rows = {
        {Rat(x), Rat(0), Rat(0), Rat(0)},
        {Rat(0), Rat(x), Rat(0), Rat(0)},
        {Rat(y), Rat(z), Rat(1), Rat(0)},
        {Rat(z), Rat(-y), Rat(0), Rat(1)},
    };
    LatticeBasis L = make_lattice(std::move(rows));
    auto gso = gram_schmidt(L);
    // Every nonzero member has squared norm divisible by x, so anything
    // strictly inside 2x has norm exactly x; the walk stops at the first hit
    // (deterministic depth-first order).
    EnumRequest req;
    req.radius_sq = Rat(2) * Rat(x) - 1; // strictly inside 2x; norms are integers
    req.skip_zero = true;
    std::optional<IntVec> hit;
    enumerate_lattice(L, gso, req, [&](const IntVec& c, const Rat& sq) -> std::optional<Rat> {
        if (sq != Rat(x))
            throw std::logic_error("lattice norm inside the ball is not x");
        if (!hit) {
            hit = c;
            return Rat(0); // collapse the search radius: done
        }
        return std::nullopt;
    });
    if (!hit)
        throw NotApplicable("lattice vector of squared norm x not found");
    RatVec img = L.image(*hit);
    std::array<std::int64_t, 4> parts{};
    for (int i = 0; i < 4; ++i)
        parts[static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(i)].get_num().get_si();
    return parts;
}

std::array<std::int64_t, 4> four_squares_prime(std::int64_t x) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::array<std::int64_t, 4>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(x);
        if (it != cache.end())
            return it->second;
    }
    auto parts = four_squares_prime_uncached(x);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(x, parts);
    return parts;
}

} // namespace

FourSquares four_squares(std::int64_t x) {
    if (x < 1)
        throw NotDefined("a positive integer is required");
    if (x > kFactorGuard)
        throw DimensionTooLarge("input exceeds the trial-division guard");
    if (x == 1)
        return {1, {1, 0, 0, 0}};
    if (x == 2)
        return {2, {1, 1, 0, 0}};
    if (is_prime(x))
        return canonical_four(x, four_squares_prime(x));

    std::int64_t square_part = 1;
    std::array<std::int64_t, 4> acc = {1, 0, 0, 0};
    std::int64_t rest = x;
    for (std::int64_t d = 2; d * d <= rest; ++d) {
        if (rest % d != 0)
            continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i)
            square_part *= d;
        if (e % 2) {
            auto prime_parts = d == 2 ? std::array<std::int64_t, 4>{1, 1, 0, 0}
                                      : four_squares_prime(d);
            acc = euler_four_square_product(acc, prime_parts);
        }
    }
    if (rest > 1) {
        auto prime_parts = rest == 2 ? std::array<std::int64_t, 4>{1, 1, 0, 0}
                                     : four_squares_prime(rest);
        acc = euler_four_square_product(acc, prime_parts);
    }
    for (auto& v : acc)
        v *= square_part;
    return canonical_four(x, acc);
}

} // namespace latgeo
