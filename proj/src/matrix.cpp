#include "latgeo/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace latgeo {

Rat dot(const RatVec& a, const RatVec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rat norm_sq(const RatVec& v) {
    return dot(v, v);
}

Rat linf_norm_sq(const RatVec& v) {
    Rat best = 0;
    for (const Rat& x : v) {
        Rat sq = x * x;
        if (sq > best)
            best = sq;
    }
    return best;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    assert(a.size() == b.size());
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scaled(const RatVec& v, const Rat& c) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * c;
    return out;
}

RatMat gram_matrix(const std::vector<RatVec>& rows) {
    std::size_t m = rows.size();
    RatMat g(m, RatVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = dot(rows[i], rows[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

Rat det_rat(RatMat a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("det_rat: not square");
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear: shape");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

std::optional<RatMat> invert(const RatMat& a) {
    std::size_t n = a.size();
    RatMat work = a;
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col) {
            std::swap(work[pivot], work[col]);
            std::swap(inv[pivot], inv[col]);
        }
        Rat d = work[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            work[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work[r][col] == 0)
                continue;
            Rat f = work[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                work[r][c] -= f * work[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

int rank_rat(RatMat a) {
    if (a.empty())
        return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rat det_int_as_rat(const IntMat& a) {
    RatMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m[i].reserve(a[i].size());
        for (const Int& v : a[i])
            m[i].emplace_back(v);
    }
    return det_rat(std::move(m));
}

IntMat hermite_normal_form(IntMat m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("hermite_normal_form: not square");

    auto row_submul = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < n; ++c)
            m[dst][c] -= q * m[src][c];
    };

    for (std::size_t col = 0; col < n; ++col) {
        // Euclid on the entries of this column at/below the pivot row.
        while (true) {
            std::size_t best = n;
            for (std::size_t r = col; r < n; ++r) {
                if (m[r][col] == 0)
                    continue;
                if (best == n || cmp(abs(m[r][col]), abs(m[best][col])) < 0)
                    best = r;
            }
            if (best == n)
                throw std::invalid_argument("hermite_normal_form: singular input");
            std::swap(m[best], m[col]);
            if (m[col][col] < 0)
                for (std::size_t c = 0; c < n; ++c)
                    m[col][c] = -m[col][c];
            bool cleared = true;
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m[r][col] == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[col][col].get_mpz_t());
                row_submul(r, col, q);
                if (m[r][col] != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < col; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[col][col].get_mpz_t());
            if (q != 0)
                row_submul(r, col, q);
        }
    }
    return m;
}

bool RankTracker::try_add(RatVec v) {
    // Rows in reduced_ are kept mutually reduced (zero at every other row's
    // lead column), so one elimination pass suffices.
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
        int lead = lead_cols_[k];
        if (v[lead] == 0)
            continue;
        Rat f = v[lead]; // reduced_ rows have unit leading entry
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] -= f * reduced_[k][c];
    }
    int lead = -1;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) {
            lead = static_cast<int>(c);
            break;
        }
    if (lead < 0)
        return false;
    Rat inv_lead = Rat(1) / v[lead];
    for (std::size_t c = 0; c < v.size(); ++c)
        v[c] *= inv_lead;
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
        if (reduced_[k][lead] == 0)
            continue;
        Rat f = reduced_[k][lead];
        for (std::size_t c = 0; c < v.size(); ++c)
            reduced_[k][c] -= f * v[c];
    }
    reduced_.push_back(std::move(v));
    lead_cols_.push_back(lead);
    return true;
}

} // namespace latgeo
