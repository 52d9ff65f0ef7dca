#pragma once

#include <gmpxx.h>

#include <string>

namespace addcomb {

// Arbitrary-magnitude integer and exact rational. All set elements, doubling
// constants and densities are held exactly; doubles appear only in the
// grid/Fourier modules.
using Int = mpz_class;
using Rat = mpq_class;

// Distance from p/q to the nearest integer, as an exact rational in [0, 1/2].
Rat torus_norm(const Rat& x);

// Parses "u/v", a plain integer, or a decimal like "0.009" into an exact
// rational. Throws StructuralError on garbage.
Rat parse_rational(const std::string& s);

// Least prime in [lo, hi); throws if the interval contains none.
long least_prime_in(long lo, long hi);

inline double to_double(const Rat& x) { return x.get_d(); }

}  // namespace addcomb
