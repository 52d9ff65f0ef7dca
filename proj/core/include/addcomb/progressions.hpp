#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "addcomb/int_set.hpp"

namespace addcomb {

// {a0 + v*l : 1 <= l <= L}. Always proper in one dimension.
struct Progression1D {
  Int a0;
  Int v;   // step, normalized positive
  long L;  // length, >= 1

  IntSet elements() const;
  long size() const { return L; }
};

// {a0 + l1*a1 + l2*a2 : 1 <= li <= Li}. Steps may be negative; properness
// (|elements| == L1*L2) is a checked property, not an invariant.
struct GAP2 {
  Int a0;
  Int a1;
  Int a2;
  long L1;
  long L2;

  IntSet elements() const;
  long nominal_size() const { return L1 * L2; }
};

using AnyProgression = std::variant<Progression1D, GAP2>;

IntSet elements_of(const AnyProgression& p);

struct PropernessResult {
  bool proper;
  // On collision: (l1, l2) != (l1', l2') mapping to the same element.
  std::optional<std::pair<std::pair<long, long>, std::pair<long, long>>>
      witness;
};

PropernessResult is_proper(const GAP2& q);

// Smallest 1-dimensional progression containing X: base min X, step the gcd
// of the gaps (1 for singletons).
Progression1D smallest_containing_ap(const IntSet& x);

// |A ∩ P| / |P| with |P| the true materialized cardinality.
Rat density_on(const IntSet& a, const AnyProgression& p);

}  // namespace addcomb
