#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/int_set.hpp"

namespace addcomb {

// x -> (x - u) / v in the forward direction. v divides x - u for every x in
// the set the map was derived from.
struct AffineMap {
  Int u;
  Int v;

  Int forward(const Int& x) const;   // (x - u) / v, exact division
  Int backward(const Int& y) const;  // u + v * y
};

// Translates X to start at 0 and divides out the gcd of its gaps. Singletons
// get the degenerate map (u = min X, v = 1).
std::pair<IntSet, AffineMap> normalize_affine(const IntSet& x);

struct IsomorphismCheck {
  bool holds;
  // First violating 2k-tuple of indices into A, lexicographic order.
  std::optional<std::vector<std::size_t>> witness;
};

// Verifies that phi (given as an index map: position i of A maps to position
// phi[i] of B) is a Freiman isomorphism of order k: every 2k-tuple must
// satisfy the sum equality in A iff it does in B. Enumerates all |A|^(2k)
// tuples; throws ResourceError when that exceeds `budget`.
IsomorphismCheck verify_freiman_isomorphism(const IntSet& a, const IntSet& b,
                                            const std::vector<std::size_t>& phi,
                                            unsigned k,
                                            std::uint64_t budget = 100'000'000);

}  // namespace addcomb
