#pragma once

#include <cstdint>

#include "addcomb/int_set.hpp"

namespace addcomb {

// Width (in bits) of the offset-normalized fast path. Results whose value
// range exceeds this fall back to exact big-integer merging.
inline constexpr std::uint64_t kBitsetWindowBits = std::uint64_t{1} << 26;

enum class DoublingMode { kPlus, kMinus };

// {a + b : a in A, b in B}. Both sets non-empty.
IntSet sumset(const IntSet& a, const IntSet& b);

// {a - b : a in A, b in B}.
IntSet difference_set(const IntSet& a, const IntSet& b);

// hA for h >= 1; h == 1 returns A unchanged.
IntSet iterated_sumset(const IntSet& a, unsigned h);

// lA - mA with the convention 0A = {0}. Requires l + m >= 1.
IntSet signed_combination(const IntSet& a, unsigned l, unsigned m);

// {a_i + a_j : (i, j) in gamma}. Indices are 0-based.
IntSet restricted_sumset(const IntSet& a, const PairRelation& gamma);

// |A+A|/|A| or |A-A|/|A| as an exact rational in lowest terms.
Rat doubling(const IntSet& a, DoublingMode mode);

// #{(a1,a2,a3,a4) in A^4 : a1 + a2 = a3 + a4}, via representation counts.
Int additive_energy(const IntSet& a);

namespace detail {
// The two sumset kernels, exposed for the fast-path-equals-slow-path tests.
// Both require non-empty inputs; the bitset kernel additionally requires the
// result range to fit in kBitsetWindowBits.
IntSet sumset_naive(const IntSet& a, const IntSet& b);
IntSet sumset_bitset(const IntSet& a, const IntSet& b);
bool bitset_path_applicable(const IntSet& a, const IntSet& b);
}  // namespace detail

}  // namespace addcomb
