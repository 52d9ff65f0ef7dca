#pragma once

#include <optional>

#include "addcomb/progressions.hpp"
#include "addcomb/sumsets.hpp"

namespace addcomb {

struct ApSearchResult {
  bool found;  // false when no window of length >= min_len fits
  Progression1D p;
  Rat density;
};

// Best AP inside [min A, max A] with step <= max_step and length >= min_len,
// by density |A ∩ P| / |P|. Ties: larger |P|, then smaller step, then
// smaller base. Exhaustive over steps; windows are element-anchored, which
// loses nothing (an optimal window can always be slid or trimmed onto an
// element of A).
ApSearchResult densest_ap(const IntSet& a, long min_len, const Int& max_step);

struct Gap2Bounds {
  Int max_v1;
  Int max_v2;
  long max_l;
};

struct Gap2SearchResult {
  bool found;
  GAP2 q;
  Rat density;
  bool exhaustive;  // whether every candidate under the bounds was scored
};

// Best proper GAP2 with nominal size >= min_size under the bounds. Step
// candidates are the top 64 most popular differences of A plus every step
// up to 32; bases are corner-anchored at elements of A.
Gap2SearchResult densest_gap2(const IntSet& a, long min_size,
                              const Gap2Bounds& bounds);

enum class Branch { kExpansion, kApDense, kGapDense, kInconclusive };

struct StructureReport {
  Branch branch;
  Rat sigma;  // |A+A| / |A|
  std::optional<AnyProgression> witness;
  std::optional<Rat> density;
  Rat delta;
  Rat eps;
  Rat min_frac;
};

// Trichotomy oracle: expansion when sigma > 4 + delta; otherwise a dense AP
// (threshold 1/2 - eps) or a dense proper GAP2 (threshold 1 - eps), each of
// size at least ceil(min_frac * |A|); inconclusive when the bounded search
// finds neither, reporting the best candidate seen.
StructureReport dichotomy_check(const IntSet& a, const Rat& delta,
                                const Rat& eps, const Rat& min_frac);

}  // namespace addcomb
