#include "addcomb/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>

#include "addcomb/errors.hpp"

namespace addcomb {

GridFunction GridFunction::constant(long n, double c) {
  return {n, std::vector<double>(static_cast<std::size_t>(n), c)};
}

GridFunction GridFunction::indicator(long n, const IntSet& support) {
  GridFunction f = constant(n, 0.0);
  for (long i = 1; i <= n; ++i)
    if (support.contains(Int(i))) f.values[static_cast<std::size_t>(i - 1)] = 1.0;
  return f;
}

void GridFunction::validate() const {
  if (N < 1 || values.size() != static_cast<std::size_t>(N))
    throw StructuralError("GridFunction: length must equal N");
  for (double v : values)
    if (!std::isfinite(v) || v < -2.0 || v > 2.0)
      throw StructuralError("GridFunction: values must be finite and in [-2, 2]");
}

double l2_norm(const GridFunction& f) {
  f.validate();
  double s = 0.0;
  for (double v : f.values) s += v * v;
  return std::sqrt(s / static_cast<double>(f.N));
}

Int quadruple_count(long n) {
  if (n < 1) throw PreconditionError("quadruple_count: N >= 1");
  Int m(n);
  return (2 * m * m * m + m) / 3;
}

double u2_norm_direct(const GridFunction& f) {
  f.validate();
  if (f.N > 4096) throw ResourceError("u2_norm_direct: N > 4096");
  const long n = f.N;
  // r_f(s) = sum_{a+d=s} f(a) f(d); the quadruple sum is sum_s r_f(s)^2.
  std::vector<double> rep(static_cast<std::size_t>(2 * n + 1), 0.0);
  for (long a = 1; a <= n; ++a)
    for (long d = 1; d <= n; ++d)
      rep[static_cast<std::size_t>(a + d)] += f.at(a) * f.at(d);
  double quad = 0.0;
  for (double r : rep) quad += r * r;
  double e = quadruple_count(n).get_d();
  return std::pow(quad / e, 0.25);
}

double u2_norm_fourier(const GridFunction& f) {
  f.validate();
  const long n = f.N;
  const long p = least_prime_in(200 * n, 400 * n);

  // Embed with support [N] (mod p); p > 2N so integer and cyclic quadruple
  // counts coincide.
  std::vector<fftw_complex> in(static_cast<std::size_t>(p)),
      out(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) {
    in[static_cast<std::size_t>(i)][0] = (i >= 1 && i <= n) ? f.at(i) : 0.0;
    in[static_cast<std::size_t>(i)][1] = 0.0;
  }
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(p), in.data(), out.data(),
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  // \hat f(r) = p^{-1} sum f(x) e(rx/p): fold the 1/p into the l4 sum.
  double l4 = 0.0;
  for (long r = 0; r < p; ++r) {
    const double re = out[static_cast<std::size_t>(r)][0];
    const double im = out[static_cast<std::size_t>(r)][1];
    const double sq = re * re + im * im;
    l4 += sq * sq;
  }
  const double pd = static_cast<double>(p);
  l4 /= pd * pd * pd * pd;  // |f̂|^4 normalization
  const double e = quadruple_count(n).get_d();
  return std::pow(pd * pd * pd / e * l4, 0.25);
}

MeanBoundReport progression_mean_bound_check(const GridFunction& f,
                                             const Progression1D& p,
                                             double eta) {
  f.validate();
  if (eta <= 0.0) throw PreconditionError("progression_mean_bound_check: eta > 0");
  IntSet pts = p.elements();
  if (pts.min() < 1 || pts.max() > f.N)
    throw PreconditionError("progression_mean_bound_check: P must lie in [N]");
  if (static_cast<double>(p.L) < eta * static_cast<double>(f.N))
    throw PreconditionError("progression_mean_bound_check: |P| < eta*N");

  double mean = 0.0;
  for (const Int& x : pts) mean += f.at(mpz_get_si(x.get_mpz_t()));
  mean = std::abs(mean / static_cast<double>(pts.size()));
  double rhs = u2_norm_direct(f) / eta;
  return {mean, rhs, rhs > 0.0 ? mean / rhs : 0.0};
}

}  // namespace addcomb
