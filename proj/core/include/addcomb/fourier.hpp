#pragma once

#include <vector>

#include "addcomb/numeric.hpp"
#include "addcomb/progressions.hpp"

namespace addcomb {

// f : [N] -> [-2, 2]. values[i] is f(i + 1).
struct GridFunction {
  long N;
  std::vector<double> values;

  static GridFunction constant(long n, double c);
  static GridFunction indicator(long n, const IntSet& support);
  double at(long n1based) const { return values[static_cast<std::size_t>(n1based - 1)]; }
  void validate() const;  // length == N, all values finite and in [-2, 2]
};

// (N^{-1} sum |f(n)|^2)^{1/2}
double l2_norm(const GridFunction& f);

// #{(a,b,c,d) in [N]^4 : a + d = b + c} = (2N^3 + N) / 3.
Int quadruple_count(long n);

// U^2 norm by direct representation sums, O(N^2). N <= 4096.
double u2_norm_direct(const GridFunction& f);

// U^2 norm through the Z/pZ Fourier identity with p the least prime in
// [200N, 400N). Since p > 2N the cyclic quadruple count has no wraparound,
// so this agrees with the direct path up to floating error.
double u2_norm_fourier(const GridFunction& f);

struct MeanBoundReport {
  double lhs;    // |mean of f over P|
  double rhs;    // eta^{-1} * ||f||_{U^2}
  double ratio;  // lhs / rhs (0 when rhs == 0)
};

// Diagnostic for the progression-mean bound: reports both sides, asserts
// nothing. Requires P ⊆ [N] and |P| >= eta*N.
MeanBoundReport progression_mean_bound_check(const GridFunction& f,
                                             const Progression1D& p,
                                             double eta);

}  // namespace addcomb
