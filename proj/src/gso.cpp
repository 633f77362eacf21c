#include "latgeo/gso.hpp"

#include <cmath>

namespace latgeo {

double ExactSqrt::value() const {
    return sign * std::sqrt(rat_d(square));
}

ExactSqrt ExactSqrt::from_signed_square(const Rat& signed_sq) {
    ExactSqrt out;
    int s = sgn(signed_sq);
    out.sign = s;
    out.square = s < 0 ? Rat(-signed_sq) : signed_sq;
    return out;
}

GramSchmidtData gram_schmidt(const LatticeBasis& L) {
    int m = L.rank();
    int n = L.ambient_dim();
    GramSchmidtData out;
    out.tilde.reserve(static_cast<std::size_t>(m));
    out.mu.assign(static_cast<std::size_t>(m), RatVec(static_cast<std::size_t>(m), Rat(0)));
    out.tilde_norms_sq.resize(static_cast<std::size_t>(m));

    for (int i = 0; i < m; ++i) {
        RatVec t = L.row(i);
        for (int j = 0; j < i; ++j) {
            Rat mu = dot(L.row(i), out.tilde[static_cast<std::size_t>(j)]) /
                     out.tilde_norms_sq[static_cast<std::size_t>(j)];
            out.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mu;
            for (int c = 0; c < n; ++c)
                t[static_cast<std::size_t>(c)] -=
                    mu * out.tilde[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        }
        out.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        out.tilde_norms_sq[static_cast<std::size_t>(i)] = norm_sq(t);
        out.tilde.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<ExactSqrt>> gso_triangular(const LatticeBasis& L) {
    auto gso = gram_schmidt(L);
    int m = L.rank();
    int n = L.ambient_dim();
    std::vector<std::vector<ExactSqrt>> mat(
        static_cast<std::size_t>(n), std::vector<ExactSqrt>(static_cast<std::size_t>(m)));
    for (int col = 0; col < m; ++col) {
        for (int row = 0; row < col; ++row) {
            Rat mu = gso.mu[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
            // mu_{col,row} * ||tilde_row||, carried as a signed square.
            Rat signed_sq = mu * mu * gso.tilde_norms_sq[static_cast<std::size_t>(row)];
            if (mu < 0)
                signed_sq = -signed_sq;
            mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                ExactSqrt::from_signed_square(signed_sq);
        }
        mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] =
            ExactSqrt::from_signed_square(gso.tilde_norms_sq[static_cast<std::size_t>(col)]);
    }
    return mat;
}

Rat gso_min_norm_sq(const LatticeBasis& L) {
    auto gso = gram_schmidt(L);
    Rat best = gso.tilde_norms_sq.front();
    for (const Rat& b : gso.tilde_norms_sq)
        if (b < best)
            best = b;
    return best;
}

} // namespace latgeo
