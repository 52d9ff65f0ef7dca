#pragma once

#include <vector>

#include "addcomb/numeric.hpp"
#include "addcomb/progressions.hpp"

namespace addcomb {

// A function on the discretized torus (Z_m)^d, d in {1, 2}, values in [0, 1].
// Row-major for d = 2. Measure is counting measure / m^d.
struct TorusGrid {
  int d;
  long m;
  std::vector<double> values;

  static TorusGrid constant(int d, long m, double c);
  // Indicator of an arc (d = 1): points j/m with ||j/m - center|| <= halfwidth.
  static TorusGrid arc(long m, const Rat& center, const Rat& halfwidth);

  std::size_t points() const;
  double at(long i) const { return values[static_cast<std::size_t>(i)]; }
  double at(long i, long j) const {
    return values[static_cast<std::size_t>(i * m + j)];
  }
  void validate() const;
  Rat measure() const;  // (number of values >= 1/2) / m^d, for 0/1 grids
};

// (f * g)(x) = m^{-d} sum_y f(y) g(x - y). Picks the direct or FFT kernel by
// size; both agree to 1e-10.
TorusGrid convolve(const TorusGrid& f, const TorusGrid& g);

// (f ∘ g)(x) = m^{-d} sum_y f(y) g(y - x).
TorusGrid correlate(const TorusGrid& f, const TorusGrid& g);

namespace detail {
TorusGrid convolve_direct(const TorusGrid& f, const TorusGrid& g);
TorusGrid convolve_fft(const TorusGrid& f, const TorusGrid& g);
}  // namespace detail

// Exact fraction of grid points with value >= t.
Rat superlevel_measure(const TorusGrid& f, double t);

struct KneserReport {
  Rat mu1;
  Rat mu2;
  Rat measure;        // mu({1_S1 * 1_S2 >= lambda})
  Rat bound;          // min{1, mu1 + mu2}
  double deficiency;  // measure - bound; the lemma asserts >= -O(sqrt(lambda))
};

// Requires 0 < lambda < min(mu(S1)^2, mu(S2)^2). S1, S2 are 0/1 grids.
KneserReport kneser_deficiency(const TorusGrid& s1, const TorusGrid& s2,
                               double lambda);

struct LevelSets {
  std::vector<bool> k;  // F >= eta/2
  std::vector<bool> s;  // F >= eta
  std::vector<bool> t;  // F >= 1 - eta^c
};

// Thresholded level sets; requires eta < 1 - eta^c so that T ⊆ S ⊆ K.
LevelSets level_sets(const TorusGrid& f, double eta, double c);

struct SandwichReport {
  bool sandwich_ok;    // f1 <= 1_I <= f2 pointwise, verified exactly
  Rat gap_integral;    // grid mean of f2 - f1
  Rat gap_bound;       // sigma + 4/m with sigma = 4*tau
  Rat lipschitz;       // max discrete difference quotient over both functions
  Rat lipschitz_bound; // 2/tau
};

struct SandwichResult {
  TorusGrid f1;
  TorusGrid f2;
  SandwichReport report;
};

// Mollified indicator pair for the arc I = (center +- halfwidth) on Z_m:
// f1 = (1/tau) 1_{I shrunk by tau} * bump, f2 likewise with I grown by tau.
// All three report checks are computed in exact rational arithmetic.
// Requires mu(I) + 4*tau < 1.
SandwichResult lipschitz_sandwich(const Rat& center, const Rat& halfwidth,
                                  const Rat& tau, long m);

struct EquidistributionReport {
  double sample_mean;   // |P|^{-1} sum F(n * theta), nearest-grid evaluation
  double grid_integral;
  double gap;
  bool theta_certified;  // certify_irrational verdict at the given A
};

// Diagnostic for the Lipschitz equidistribution bound; asserts nothing.
EquidistributionReport equidistribution_gap(const TorusGrid& f,
                                            const std::vector<Rat>& theta,
                                            const Progression1D& p, long n,
                                            double irrationality_a);

}  // namespace addcomb
