#include "latgeo/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace latgeo {

Int floor_rat(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Int ceil_rat(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Int round_half_up(const Rat& q) {
    return floor_rat(q + Rat(1, 2));
}

bool is_integral(const Rat& q) {
    return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

Rat parse_rational(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '+')
        body.erase(body.begin());
    if (body.empty())
        throw std::invalid_argument("empty number");
    for (char c : body) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw std::invalid_argument("malformed number '" + text + "'");
    }
    Rat q;
    if (q.set_str(body, 10) != 0)
        throw std::invalid_argument("malformed number '" + text + "'");
    if (mpz_sgn(q.get_den_mpz_t()) == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

std::string int_str(const Int& n) {
    return n.get_str();
}

double rat_d(const Rat& q) {
    return q.get_d();
}

Int ceil_nth_root_int(const Rat& x, unsigned n) {
    if (x <= 0 || n == 0)
        throw std::invalid_argument("ceil_nth_root_int domain");
    // k = ceil((p/q)^(1/n)) over integers: floor root of ceil(p/q), then fix up.
    Int q_ceil = ceil_rat(x);
    Int k;
    mpz_root(k.get_mpz_t(), q_ceil.get_mpz_t(), n);
    if (k < 1)
        k = 1;
    Rat kn(k);
    Rat pow = 1;
    for (unsigned i = 0; i < n; ++i)
        pow *= kn;
    while (pow < x) {
        k += 1;
        pow = 1;
        kn = Rat(k);
        for (unsigned i = 0; i < n; ++i)
            pow *= kn;
    }
    return k;
}

Rat upper_nth_root(const Rat& x, unsigned n) {
    if (x <= 0 || n == 0)
        throw std::invalid_argument("upper_nth_root domain");
    Int p = x.get_num();
    Int q = x.get_den();
    Int scaled = p;
    for (unsigned i = 0; i + 1 < n; ++i)
        scaled *= q;
    Int r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n); // floor root
    Rat bound(r + 1, q);
    bound.canonicalize();
    return bound;
}

namespace {

// 50 decimal digits of pi; the true value lies strictly between the
// truncation and truncation + 1 ulp.
const char* kPiDigits = "314159265358979323846264338327950288419716939937510";

Rat make_pi(bool upper) {
    Int num(kPiDigits);
    if (upper)
        num += 1;
    Int den(1);
    for (int i = 0; i < 50; ++i)
        den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

const Rat& pi_lower() {
    static const Rat v = make_pi(false);
    return v;
}

const Rat& pi_upper() {
    static const Rat v = make_pi(true);
    return v;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace latgeo
