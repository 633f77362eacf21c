#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latgeo {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Largest integer <= q.
Int floor_rat(const Rat& q);

/// Smallest integer >= q.
Int ceil_rat(const Rat& q);

/// Nearest integer to q, ties rounded up (floor(q + 1/2)).
Int round_half_up(const Rat& q);

bool is_integral(const Rat& q);

/// Parses "p/q" or a plain integer, with optional sign. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical "p/q" (or "n" when the denominator is 1).
std::string rat_str(const Rat& q);

std::string int_str(const Int& n);

double rat_d(const Rat& q);

/// Smallest integer k >= 1 with k^n >= x (x > 0). Used to turn n-th-root
/// upper bounds into exact enumeration radii.
Int ceil_nth_root_int(const Rat& x, unsigned n);

/// Rational upper bound on x^(1/n) with small relative overshoot:
/// (floor((p * q^(n-1))^(1/n)) + 1) / q for x = p/q.
Rat upper_nth_root(const Rat& x, unsigned n);

/// Rational enclosure of pi, tight to ~50 decimal digits. Comparisons of
/// rational multiples of pi^k against rationals stay exact as long as the
/// enclosure separates the two sides.
const Rat& pi_lower();
const Rat& pi_upper();

/// Floats rendered for reports: 12 significant digits.
std::string fmt_double(double x);

} // namespace latgeo
