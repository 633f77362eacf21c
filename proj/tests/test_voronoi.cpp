#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

#include "latgeo/minima.hpp"
#include "latgeo/voronoi.hpp"

#include <cmath>

using namespace latgeo;
using namespace latgeo::testing;

namespace {

LatticeBasis identity_lattice(int n) {
    std::vector<RatVec> rows(static_cast<std::size_t>(n),
                             RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return make_lattice(std::move(rows));
}

} // namespace

TEST_CASE("relevant vectors of the identity lattice") {
    auto rv2 = relevant_vectors(identity_lattice(2));
    REQUIRE(rv2.vectors.size() == 2); // 4 counting signs
    CHECK(rv2.vectors[0].vector == RatVec{Rat(1), Rat(0)});
    CHECK(rv2.vectors[1].vector == RatVec{Rat(0), Rat(1)});

    auto rv3 = relevant_vectors(identity_lattice(3));
    CHECK(rv3.vectors.size() == 3); // 6 counting signs

    std::vector<RatVec> rows(7, RatVec(7, Rat(0)));
    for (int i = 0; i < 7; ++i)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK_THROWS_AS(relevant_vectors(make_lattice(std::move(rows))), DimensionTooLarge);
}

TEST_CASE("relevant vectors agree with the coset brute force") {
    auto corpus = random_corpus(24, 2, 4, 5, 3333);
    for (const auto& L : corpus) {
        auto fast = relevant_vectors(L);
        auto buckets = coset_minima_bruteforce(L);
        std::size_t expected = 0;
        for (const auto& [parity, cm] : buckets) {
            // dedup up to sign inside the bucket
            std::vector<IntVec> canon;
            for (const auto& x : cm.minimizers) {
                IntVec c = oracle_canonical_sign(x) ? x : oracle_negate(x);
                bool seen = false;
                for (const auto& k : canon)
                    if (k == c)
                        seen = true;
                if (!seen)
                    canon.push_back(c);
            }
            if (canon.size() == 1)
                ++expected;
        }
        CHECK(fast.vectors.size() == expected);
        for (const auto& v : fast.vectors) {
            auto it = buckets.find(v.coset);
            REQUIRE(it != buckets.end());
            CHECK(it->second.min_sq == v.norm_sq);
        }
    }
}

TEST_CASE("every relevant vector is the unique shortest of its parity class") {
    auto corpus = random_corpus(10, 2, 3, 6, 9191);
    for (const auto& L : corpus) {
        auto rv = relevant_vectors(L);
        for (const auto& v : rv.vectors) {
            // spot check: v stays strictly shortest against v + 2w for all
            // lattice w within twice its length
            Rat bound = 4 * v.norm_sq;
            auto near = enumerate_below(L, bound, Norm::L2);
            for (const auto& w : near) {
                IntVec shifted(v.coeffs.size());
                bool same_class = true;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    Int diff = w[i] - v.coeffs[i];
                    if (mpz_tstbit(diff.get_mpz_t(), 0) != 0) {
                        same_class = false;
                        break;
                    }
                }
                if (!same_class)
                    continue;
                Rat other = norm_sq(L.image(w));
                CHECK(other >= v.norm_sq);
                if (other == v.norm_sq) {
                    bool is_same = w == v.coeffs;
                    bool is_neg = w == oracle_negate(v.coeffs);
                    CHECK((is_same || is_neg));
                }
            }
        }
    }
}

TEST_CASE("cell membership examples") {
    auto I = identity_lattice(2);
    CHECK(in_voronoi_cell({Rat(0), Rat(0)}, I));
    CHECK(in_voronoi_cell({Rat(2, 5), Rat(2, 5)}, I));
    CHECK_FALSE(in_voronoi_cell({Rat(3, 5), Rat(0)}, I));
    CHECK(in_voronoi_cell({Rat(1, 2), Rat(0)}, I)); // closed cell: facet point

    // the origin sits in every lattice's cell
    CHECK(in_voronoi_cell({Rat(0), Rat(0)}, make_lattice({{Rat(2), Rat(0)}, {Rat(1), Rat(2)}})));
}

TEST_CASE("translated cells tile space up to boundary ties") {
    auto corpus = random_corpus(6, 2, 3, 4, 414243);
    Rng rng(21);
    for (const auto& L : corpus) {
        auto relevant = relevant_vectors(L);
        auto member = [&](const RatVec& p) {
            for (const auto& rv : relevant.vectors) {
                Rat ip = dot(p, rv.vector);
                if (ip < 0)
                    ip = -ip;
                if (2 * ip > rv.norm_sq)
                    return false;
            }
            return true;
        };
        auto minima = successive_minima(L);
        Rat search_sq = 4 * Rat(L.rank()) * minima.lambda_sq.back();
        auto candidates = enumerate_below(L, search_sq, Norm::L2);
        for (int k = 0; k < 25; ++k) {
            // stay inside the fundamental mesh so every covering translate is
            // within the candidate radius
            RatVec coords = random_point(L.rank(), 16, 16, rng);
            for (auto& c : coords)
                if (c < 0)
                    c = -c;
            RatVec x(static_cast<std::size_t>(L.ambient_dim()), Rat(0));
            for (int i = 0; i < L.rank(); ++i)
                for (int j = 0; j < L.ambient_dim(); ++j)
                    x[static_cast<std::size_t>(j)] += coords[static_cast<std::size_t>(i)] * L.row(i)[static_cast<std::size_t>(j)];

            std::vector<RatVec> holders; // lattice translates whose cell contains x
            std::vector<IntVec> translates;
            translates.push_back(IntVec(static_cast<std::size_t>(L.rank()), Int(0)));
            for (const auto& c : candidates) {
                translates.push_back(c);
                translates.push_back(oracle_negate(c));
            }
            for (const auto& u : translates) {
                RatVec shifted = x;
                RatVec img = L.image(u);
                for (std::size_t j = 0; j < shifted.size(); ++j)
                    shifted[j] -= img[j];
                if (member(shifted))
                    holders.push_back(img);
            }
            REQUIRE(!holders.empty());
            if (holders.size() > 1) {
                // multiple holders only on exact distance ties
                RatVec d0 = vec_sub(x, holders[0]);
                Rat dist = norm_sq(d0);
                for (std::size_t h = 1; h < holders.size(); ++h)
                    CHECK(norm_sq(vec_sub(x, holders[h])) == dist);
            }
        }
    }
}

TEST_CASE("cell membership agrees with the nearest-vector definition") {
    auto corpus = random_corpus(6, 2, 3, 5, 70707);
    Rng rng(3);
    for (const auto& L : corpus) {
        auto relevant = relevant_vectors(L);
        auto member = [&](const RatVec& p) {
            for (const auto& rv : relevant.vectors) {
                Rat ip = dot(p, rv.vector);
                if (ip < 0)
                    ip = -ip;
                if (2 * ip > rv.norm_sq)
                    return false;
            }
            return true;
        };
        auto minima = successive_minima(L);
        Rat search_sq = 4 * Rat(L.rank()) * minima.lambda_sq.back(); // (2 * upper)^2
        auto candidates = enumerate_below(L, search_sq, Norm::L2);
        for (int k = 0; k < 1000; ++k) {
            RatVec x = random_point(L.ambient_dim(), 30, 8, rng);
            bool inside = member(x);
            if (k % 50 == 0) // tie the public operation in as well
                CHECK(inside == in_voronoi_cell(x, L));
            // brute force against every nearby lattice vector
            Rat x_sq = norm_sq(x);
            bool expect = true;
            for (const auto& c : candidates) {
                RatVec u = L.image(c);
                for (int sgn = 0; sgn < 2 && expect; ++sgn) {
                    RatVec diff = x;
                    for (std::size_t j = 0; j < diff.size(); ++j)
                        diff[j] -= sgn == 0 ? u[j] : -u[j];
                    if (norm_sq(diff) < x_sq)
                        expect = false;
                }
                if (!expect)
                    break;
            }
            INFO("point index ", k);
            CHECK(inside == expect);
        }
    }
}

TEST_CASE("radius report examples") {
    auto I2 = identity_lattice(2);
    auto rr = radius_report(I2);
    CHECK(rr.packing_radius_sq == Rat(1, 4));
    CHECK(rr.covering_lower_sq == Rat(1, 4));
    CHECK(rr.covering_upper_sq == Rat(1, 2));
    CHECK(rr.covering_lower_volumetric_sq ==
          doctest::Approx(1.0 / 3.14159265358979).epsilon(1e-12));
    // true covering radius sqrt(2)/2 makes the upper bound tight
    auto est = covering_radius_estimate(I2, 64);
    CHECK(est == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    auto I3 = identity_lattice(3);
    auto est3 = covering_radius_estimate(I3, 8);
    CHECK(est3 == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    auto rr3 = radius_report(I3);
    CHECK(rr3.covering_upper_sq == Rat(3, 4)); // tight in three dimensions

    auto R = make_lattice({{Rat(1), Rat(0)}, {Rat(0), Rat(3)}});
    auto rrR = radius_report(R);
    CHECK(rrR.packing_radius_sq == Rat(1, 4));
    CHECK(rrR.covering_lower_sq == Rat(9, 4));
    CHECK(rrR.covering_upper_sq == Rat(9, 2));
}

TEST_CASE("covering estimate in one dimension") {
    auto I1 = identity_lattice(1);
    CHECK(covering_radius_estimate(I1, 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(covering_radius_estimate(I1, 10) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("covering estimate stays inside the sandwich") {
    auto corpus = random_corpus(9, 2, 3, 4, 112233);
    for (const auto& L : corpus) {
        auto rr = radius_report(L);
        int grid = 8;
        double est = covering_radius_estimate(L, grid);
        double upper = std::sqrt(rat_d(rr.covering_upper_sq));
        double lower = std::sqrt(rat_d(rr.covering_lower_sq));
        // grid slack: half the diameter of one grid cell
        double slack = 0;
        for (int i = 0; i < L.rank(); ++i)
            slack += std::sqrt(rat_d(norm_sq(L.row(i))));
        slack /= 2.0 * grid;
        CHECK(est <= upper * (1 + 1e-12));
        CHECK(est >= lower - slack);
    }
}

TEST_CASE("estimate example consistency") {
    auto L = make_lattice({{Rat(2), Rat(0)}, {Rat(1), Rat(2)}});
    auto rr = radius_report(L, 64);
    REQUIRE(rr.covering_estimate.has_value());
    double lower = std::sqrt(rat_d(rr.covering_lower_sq));
    double upper = std::sqrt(rat_d(rr.covering_upper_sq));
    CHECK(*rr.covering_estimate >= lower - 1e-9);
    CHECK(*rr.covering_estimate <= upper + 1e-9);
}
