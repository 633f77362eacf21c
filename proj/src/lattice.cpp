#include "latgeo/lattice.hpp"

#include "latgeo/enumerate.hpp"
#include "latgeo/minima.hpp"
#include "latgeo/packing.hpp"

#include <cmath>

namespace latgeo {

LatticeBasis::LatticeBasis(std::vector<RatVec> rows, RatMat gram, Rat det_sq)
    : rows_(std::move(rows)),
      gram_(std::move(gram)),
      det_sq_(std::move(det_sq)),
      m_(static_cast<int>(rows_.size())),
      n_(static_cast<int>(rows_.front().size())) {}

LatticeBasis LatticeBasis::from_rows(std::vector<RatVec> rows) {
    if (rows.empty())
        throw RaggedInput("no generator rows given");
    std::size_t n = rows.front().size();
    if (n == 0)
        throw RaggedInput("empty generator row");
    for (const auto& r : rows)
        if (r.size() != n)
            throw RaggedInput("generator rows have differing lengths");
    if (rows.size() > n)
        throw DependentRows("more rows than ambient dimensions");
    RatMat gram = gram_matrix(rows);
    Rat det_sq = det_rat(gram);
    if (det_sq == 0)
        throw DependentRows("generator rows are linearly dependent");
    return LatticeBasis(std::move(rows), std::move(gram), std::move(det_sq));
}

RatVec LatticeBasis::image(const IntVec& coeffs) const {
    RatVec out(static_cast<std::size_t>(n_), Rat(0));
    for (int i = 0; i < m_; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0)
            continue;
        Rat c(coeffs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n_; ++j)
            out[static_cast<std::size_t>(j)] += c * rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return out;
}

RatVec LatticeBasis::basis_coordinates(const RatVec& x) const {
    if (!complete())
        throw NotFullRank("basis coordinates need a full-rank lattice");
    if (static_cast<int>(x.size()) != n_)
        throw ShapeMismatch("point dimension differs from ambient dimension");
    // t * A = x  <=>  A^T t^T = x^T
    RatMat at(static_cast<std::size_t>(n_), RatVec(static_cast<std::size_t>(m_)));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j)
            at[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    auto t = solve_linear(std::move(at), x);
    // Construction guarantees invertibility.
    return *t;
}

LatticeBasis make_lattice(std::vector<RatVec> rows) {
    return LatticeBasis::from_rows(std::move(rows));
}

Rat determinant_squared(const LatticeBasis& L) {
    return L.det_squared();
}

namespace {

// Coefficients of each row of B in terms of A's rows, via the Gram system
// G c^T = A b^T; nullopt when some row of B leaves A's span.
std::optional<RatMat> coefficients_in(const LatticeBasis& A, const LatticeBasis& B) {
    int m = A.rank();
    int n = A.ambient_dim();
    RatMat coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        RatVec rhs(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            rhs[static_cast<std::size_t>(k)] = dot(A.row(k), B.row(i));
        auto c = solve_linear(A.gram(), rhs);
        if (!c)
            return std::nullopt;
        // Verify the reconstruction exactly: a least-squares residue means
        // B's row is outside A's span.
        RatVec rebuilt(static_cast<std::size_t>(n), Rat(0));
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < n; ++j)
                rebuilt[static_cast<std::size_t>(j)] += (*c)[static_cast<std::size_t>(k)] * A.row(k)[static_cast<std::size_t>(j)];
        for (int j = 0; j < n; ++j)
            if (rebuilt[static_cast<std::size_t>(j)] != B.row(i)[static_cast<std::size_t>(j)])
                return std::nullopt;
        coeffs.push_back(std::move(*c));
    }
    return coeffs;
}

} // namespace

SameLatticeResult same_lattice(const LatticeBasis& A, const LatticeBasis& B) {
    if (A.rank() != B.rank() || A.ambient_dim() != B.ambient_dim())
        throw ShapeMismatch("bases differ in rank or ambient dimension");
    auto coeffs = coefficients_in(A, B);
    if (!coeffs)
        return {false, std::nullopt};

    int m = A.rank();
    // Clear denominators and compare Hermite canonical forms: the coefficient
    // lattice of B must equal Z^m, i.e. HNF(d*C) == d*I.
    Int d = 1;
    for (const auto& row : *coeffs)
        for (const Rat& q : row)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    IntMat scaled(static_cast<std::size_t>(m), IntVec(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat v = (*coeffs)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rat(d);
            scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num();
        }
    if (det_int_as_rat(scaled) == 0)
        return {false, std::nullopt};
    IntMat h = hermite_normal_form(scaled);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Int expect = (i == j) ? d : Int(0);
            if (h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != expect)
                return {false, std::nullopt};
        }

    UnimodularWitness w;
    w.matrix.assign(static_cast<std::size_t>(m), IntVec(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            w.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (*coeffs)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_num();
    return {true, std::move(w)};
}

MeshPoint reduce_mod_mesh(const RatVec& x, const LatticeBasis& L) {
    if (!L.complete())
        throw NotFullRank("mesh reduction needs a full-rank lattice");
    RatVec t = L.basis_coordinates(x);
    MeshPoint out;
    out.reduced.resize(t.size());
    out.offset.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        out.offset[i] = floor_rat(t[i]);
        out.reduced[i] = t[i] - Rat(out.offset[i]);
    }
    return out;
}

std::optional<std::pair<int, int>>
blichfeldt_collision(const std::vector<RatVec>& points, const LatticeBasis& L) {
    if (!L.complete())
        throw NotFullRank("collision search needs a full-rank lattice");
    std::vector<RatVec> reduced;
    reduced.reserve(points.size());
    for (const auto& p : points)
        reduced.push_back(reduce_mod_mesh(p, L).reduced);
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (reduced[static_cast<std::size_t>(i)] == reduced[static_cast<std::size_t>(j)])
                return std::make_pair(i, j);
    return std::nullopt;
}

PointCountRatio point_count_ratio(const LatticeBasis& L, const Rat& radius) {
    if (!L.complete())
        throw NotFullRank("point counting needs a full-rank lattice");
    if (L.ambient_dim() > 4)
        throw DimensionTooLarge("point counting is guarded to dimension <= 4");
    if (radius <= 0)
        throw NotDefined("radius must be positive");
    Rat r_sq = radius * radius;
    auto vecs = enumerate_below(L, r_sq, Norm::L2);
    PointCountRatio out;
    out.count = 1 + 2 * static_cast<long>(vecs.size()); // origin plus +-v pairs
    out.ball_volume = ball_volume(L.ambient_dim(), rat_d(radius));
    out.ratio = out.ball_volume / static_cast<double>(out.count);
    return out;
}

} // namespace latgeo
