#pragma once

#include <optional>

#include "addcomb/int_set.hpp"
#include "addcomb/progressions.hpp"

namespace addcomb {

// Parameters of Lev's interval-extraction lemma for a normalized set
// X ⊆ {0, ..., l} with 0, l ∈ X, |X| >= 3, gcd(X) = 1.
struct LevParams {
  long l;
  long card_x;
  long k;  // floor((l-1)/(|X|-2)); at integer ratios k-1 is also admissible
  long r;  // (k+1)(|X|-2) - (l-2)
};

LevParams lev_parameters(const IntSet& x);

struct LevReport {
  LevParams params;
  bool contains_even;  // 2kX  ⊇ [kl - kr, kl + kr]
  bool contains_odd;   // (2k+1)X ⊇ [kl - kr, (k+1)l + kr]
};

// Checks both interval containments of the lemma. `k_override` exercises the
// alternative admissible k at integer ratios; it must still satisfy the
// bracketing.
LevReport lev_verify(const IntSet& x, std::optional<long> k_override = {});

struct CoverResult {
  bool holds;
  std::optional<Int> witness;  // an element of the target missing from lX - mX
};

// Precondition handling: kStrict throws on violated hypotheses, kAdvisory
// runs the verdict anyway (the known sharpness counterexamples live exactly
// on the boundary).
enum class PrecheckMode { kStrict, kAdvisory };

// Lemma: |P| >= 12, X ⊆ P, |X|/|P| > 1/2 implies P ⊆ 5X - 4X.
CoverResult cover_5_4(const IntSet& x, const Progression1D& p,
                      PrecheckMode mode = PrecheckMode::kStrict);

// Lemma: |X| >= 100 and |X|/|P| > 2/5 for P the smallest containing AP
// implies P ⊆ 9X - 8X.
CoverResult cover_9_8(const IntSet& x, PrecheckMode mode = PrecheckMode::kStrict);

// Lemma: Q proper, |X| >= 100, |X| >= (1 - c)|Q| with c < 1/10 implies
// Q ⊆ 41X - 40X. An improper Q is always an error.
CoverResult cover_41_40(const IntSet& x, const GAP2& q,
                        PrecheckMode mode = PrecheckMode::kStrict);

}  // namespace addcomb
