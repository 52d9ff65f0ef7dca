#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "addcomb/numeric.hpp"
#include "addcomb/progressions.hpp"

namespace addcomb {

// B_N(alpha, sigma) = { n : |n| <= N, ||n*alpha|| < sigma }. Alpha is exact:
// either a rational or the value of a finite continued fraction.
struct BohrSpec {
  Rat alpha;              // in (0, 1)
  std::vector<Int> cf;    // continued-fraction terms when given that way
  Rat sigma;              // in (0, 1/100)
  long N;

  static BohrSpec from_rational(const Rat& alpha, const Rat& sigma, long n);
  static BohrSpec from_cf(const std::vector<Int>& terms, const Rat& sigma,
                          long n);
  bool has_cf() const { return !cf.empty(); }
  void validate() const;
  // Exact membership test for a single integer.
  bool contains(const Int& n) const;
};

// Exact enumeration of the Bohr set. Guarded at N <= 10^8.
IntSet bohr_set(const BohrSpec& spec);

// Value of a finite continued fraction [a0; a1, a2, ...].
Rat cf_value(const std::vector<Int>& terms);

// Continued-fraction expansion of a rational in (0, 1), canonical form
// (last term >= 2 unless the expansion is just [0; a1]).
std::vector<Int> cf_expansion(const Rat& alpha);

// Convergents p_k/q_k of a continued fraction, at most `depth` of them.
// A terminating expansion returns the full (shorter) list.
std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& terms,
                                             std::size_t depth);
std::vector<std::pair<Int, Int>> convergents(const Rat& alpha,
                                             std::size_t depth);

// Integer lattice spanned by b1, b2.
struct Lattice2 {
  std::pair<Int, Int> b1;
  std::pair<Int, Int> b2;

  Int det() const;  // may be negative; |det| != 0 for valid lattices
};

struct MinimaResult {
  Rat lambda1;
  Rat lambda2;
  std::pair<Int, Int> v1;
  std::pair<Int, Int> v2;
};

// Exact successive minima of the box {|z1| <= N, |z2| <= halfheight} with
// respect to the lattice, under the scaled sup-norm max(|z1|/N, |z2|/H).
// Enumerates one period of x-residue classes, with early termination; the
// Minkowski bound lambda1*lambda2 <= det/(N*H) is asserted on the result.
MinimaResult successive_minima_2d(const Lattice2& lattice, long n,
                                  const Rat& halfheight);

struct ExtractCertificate {
  bool all_members;    // every element re-checked against the Bohr condition
  bool proper;         // GAP2 outputs re-checked by is_proper
  long size;           // true element count
  Rat size_floor;      // sigma*N/400, the pinned surrogate for "≫ sigma*N"
  bool size_ok;        // size >= size_floor
};

struct ExtractResult {
  AnyProgression prog;
  ExtractCertificate cert;
  MinimaResult minima;       // meaningful for the lattice construction
  bool used_cf_construction; // convergent route vs Minkowski route
};

// Proper progression of dimension <= 2 inside the Bohr set, with a
// re-verified certificate. Requires sigma*N >= 400. Throws
// InternalInvariantError if the certificate fails (never returns one).
ExtractResult extract_gap(const BohrSpec& spec);

struct InhomExtractResult {
  bool found;                       // false: empty B' at this scale
  std::optional<AnyProgression> prog;  // b + P'
  Int shift;                        // the chosen b
  long bohr_size;                   // |B| by enumeration
  double size_ratio;                // |Q| / |B|
  bool certified;                   // every element satisfies n*theta in I
};

// Inhomogeneous variant: B = {n in window : n*theta in (center +- halfwidth)}.
// Finds b with b*theta in the concentric 1/100-measure interval, extracts a
// homogeneous progression for the symmetric copy, and returns b + P'.
InhomExtractResult extract_gap_inhomogeneous(const Rat& theta,
                                             const Rat& center,
                                             const Rat& halfwidth,
                                             const Progression1D& window);

struct IrrationalityCheck {
  bool irrational;
  std::optional<std::vector<Int>> witness;  // first violating m, lexicographic
};

// (A, N)-irrationality: every nonzero m with ||m||_1 <= A has
// ||m . theta|| >= A/N. Exhaustive over the l1 ball.
IrrationalityCheck certify_irrational(const std::vector<Rat>& theta,
                                      const Rat& a, long n);

}  // namespace addcomb
