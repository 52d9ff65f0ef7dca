#include "addcomb/torus_lab.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

#include "addcomb/bohr_gap.hpp"
#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

void check_shapes(const TorusGrid& f, const TorusGrid& g) {
  if (f.d != g.d || f.m != g.m)
    throw StructuralError("torus grids have mismatched shapes");
}

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

// Length of the intersection of two torus arcs (center, halfwidth), valid
// when h1 + h2 < 1/2 so the arcs cannot meet on both sides.
Rat arc_overlap(const Rat& c1, const Rat& h1, const Rat& c2, const Rat& h2) {
  if (h1 <= 0 || h2 <= 0) return Rat(0);
  Rat d = torus_norm(c1 - c2);
  Rat straddle = h1 + h2 - d;
  Rat cap = 2 * std::min(h1, h2);
  Rat overlap = std::min(straddle, cap);
  return overlap > 0 ? overlap : Rat(0);
}

}  // namespace

TorusGrid TorusGrid::constant(int d, long m, double c) {
  TorusGrid g{d, m, {}};
  g.values.assign(g.points(), c);
  return g;
}

TorusGrid TorusGrid::arc(long m, const Rat& center, const Rat& halfwidth) {
  TorusGrid g = constant(1, m, 0.0);
  for (long j = 0; j < m; ++j) {
    if (torus_norm(Rat(Int(j), Int(m)) - center) <= halfwidth)
      g.values[static_cast<std::size_t>(j)] = 1.0;
  }
  return g;
}

std::size_t TorusGrid::points() const {
  return d == 1 ? static_cast<std::size_t>(m)
                : static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
}

void TorusGrid::validate() const {
  if (d != 1 && d != 2) throw StructuralError("TorusGrid: d must be 1 or 2");
  long cap = d == 1 ? 4096 : 512;
  if (m < 1 || m > cap)
    throw StructuralError("TorusGrid: grid side out of range");
  if (values.size() != points())
    throw StructuralError("TorusGrid: value count must be m^d");
  for (double v : values)
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw StructuralError("TorusGrid: values must lie in [0, 1]");
}

Rat TorusGrid::measure() const {
  unsigned long count = 0;
  for (double v : values)
    if (v >= 0.5) ++count;
  Rat q(count, static_cast<unsigned long>(points()));
  q.canonicalize();
  return q;
}

namespace detail {

TorusGrid convolve_direct(const TorusGrid& f, const TorusGrid& g) {
  const long m = f.m;
  TorusGrid out = TorusGrid::constant(f.d, m, 0.0);
  const double scale = 1.0 / static_cast<double>(f.points());
  if (f.d == 1) {
    for (long x = 0; x < m; ++x) {
      double s = 0.0;
      for (long y = 0; y < m; ++y) s += f.at(y) * g.at(((x - y) % m + m) % m);
      out.values[static_cast<std::size_t>(x)] = s * scale;
    }
    return out;
  }
  for (long x0 = 0; x0 < m; ++x0)
    for (long x1 = 0; x1 < m; ++x1) {
      double s = 0.0;
      for (long y0 = 0; y0 < m; ++y0)
        for (long y1 = 0; y1 < m; ++y1)
          s += f.at(y0, y1) *
               g.at(((x0 - y0) % m + m) % m, ((x1 - y1) % m + m) % m);
      out.values[static_cast<std::size_t>(x0 * m + x1)] = s * scale;
    }
  return out;
}

TorusGrid convolve_fft(const TorusGrid& f, const TorusGrid& g) {
  const long m = f.m;
  const std::size_t n = f.points();
  std::vector<fftw_complex> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i][0] = f.values[i];
    fa[i][1] = 0.0;
    fb[i][0] = g.values[i];
    fb[i][1] = 0.0;
  }
  auto run = [&](fftw_complex* data, int sign) {
    fftw_plan plan =
        f.d == 1
            ? fftw_plan_dft_1d(static_cast<int>(m), data, data, sign,
                               FFTW_ESTIMATE)
            : fftw_plan_dft_2d(static_cast<int>(m), static_cast<int>(m), data,
                               data, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  };
  run(fa.data(), FFTW_FORWARD);
  run(fb.data(), FFTW_FORWARD);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re;
    fa[i][1] = im;
  }
  run(fa.data(), FFTW_BACKWARD);
  TorusGrid out = TorusGrid::constant(f.d, m, 0.0);
  // One 1/n for the unnormalized inverse transform, one for the measure.
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double v = fa[i][0] * scale;
    out.values[i] = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

}  // namespace detail

TorusGrid convolve(const TorusGrid& f, const TorusGrid& g) {
  f.validate();
  g.validate();
  check_shapes(f, g);
  // Direct is exact; keep it wherever the O(m^2d) cost stays modest.
  const bool small = f.d == 1 ? f.m <= 1024 : f.m <= 80;
  return small ? detail::convolve_direct(f, g) : detail::convolve_fft(f, g);
}

TorusGrid correlate(const TorusGrid& f, const TorusGrid& g) {
  f.validate();
  g.validate();
  check_shapes(f, g);
  // f ∘ g (x) = sum_y f(y) g(y - x) = (f * g-reflected)(x).
  TorusGrid gr = g;
  const long m = g.m;
  if (g.d == 1) {
    for (long j = 0; j < m; ++j)
      gr.values[static_cast<std::size_t>(j)] = g.at(((-j) % m + m) % m);
  } else {
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j)
        gr.values[static_cast<std::size_t>(i * m + j)] =
            g.at(((-i) % m + m) % m, ((-j) % m + m) % m);
  }
  return convolve(f, gr);
}

Rat superlevel_measure(const TorusGrid& f, double t) {
  f.validate();
  unsigned long count = 0;
  for (double v : f.values)
    if (v >= t) ++count;
  Rat q(count, static_cast<unsigned long>(f.points()));
  q.canonicalize();
  return q;
}

KneserReport kneser_deficiency(const TorusGrid& s1, const TorusGrid& s2,
                               double lambda) {
  Rat mu1 = s1.measure();
  Rat mu2 = s2.measure();
  double m1 = mu1.get_d(), m2 = mu2.get_d();
  if (!(lambda > 0.0 && lambda < std::min(m1 * m1, m2 * m2)))
    throw PreconditionError(
        "kneser_deficiency: need 0 < lambda < min(mu1^2, mu2^2)");
  TorusGrid conv = convolve(s1, s2);
  Rat measure = superlevel_measure(conv, lambda);
  Rat bound = std::min(Rat(1), Rat(mu1 + mu2));
  return {mu1, mu2, measure, bound, Rat(measure - bound).get_d()};
}

LevelSets level_sets(const TorusGrid& f, double eta, double c) {
  f.validate();
  if (!(eta > 0.0 && eta < 1.0) || !(c > 0.0))
    throw PreconditionError("level_sets: need 0 < eta < 1 and c > 0");
  const double top = 1.0 - std::pow(eta, c);
  if (top < eta)
    throw PreconditionError("level_sets: thresholds out of order (eta too large)");
  LevelSets out;
  out.k.reserve(f.values.size());
  out.s.reserve(f.values.size());
  out.t.reserve(f.values.size());
  for (double v : f.values) {
    out.k.push_back(v >= eta / 2.0);
    out.s.push_back(v >= eta);
    out.t.push_back(v >= top);
  }
  return out;
}

SandwichResult lipschitz_sandwich(const Rat& center, const Rat& halfwidth,
                                  const Rat& tau, long m) {
  if (m < 2) throw PreconditionError("lipschitz_sandwich: m >= 2");
  if (!(tau > 0)) throw PreconditionError("lipschitz_sandwich: tau > 0");
  if (2 * halfwidth + 4 * tau >= 1)
    throw PreconditionError("lipschitz_sandwich: need mu(I) + 4*tau < 1");
  if (halfwidth < 0)
    throw PreconditionError("lipschitz_sandwich: negative halfwidth");

  const Rat bump_half = tau / 2;  // B_1(tau) = [-tau/2, tau/2]
  const Rat h1 = halfwidth - tau;  // shrunken; empty when <= 0
  const Rat h2 = halfwidth + tau;  // grown

  // g_i(x) = (1/tau) * mu(I_i ∩ [x - tau/2, x + tau/2]), evaluated exactly.
  std::vector<Rat> g1(static_cast<std::size_t>(m)), g2(g1.size());
  std::vector<bool> ind(g1.size());
  for (long j = 0; j < m; ++j) {
    Rat x{Int(j), Int(m)};
    g1[static_cast<std::size_t>(j)] = arc_overlap(center, h1, x, bump_half) / tau;
    g2[static_cast<std::size_t>(j)] = arc_overlap(center, h2, x, bump_half) / tau;
    ind[static_cast<std::size_t>(j)] =
        halfwidth > 0 ? torus_norm(x - center) <= halfwidth
                      : torus_norm(x - center) == 0;
  }

  SandwichReport rep{};
  rep.sandwich_ok = true;
  Rat gap = 0;
  Rat max_diff = 0;
  for (long j = 0; j < m; ++j) {
    auto i = static_cast<std::size_t>(j);
    Rat mid = ind[i] ? Rat(1) : Rat(0);
    if (g1[i] > mid || mid > g2[i]) rep.sandwich_ok = false;
    gap += g2[i] - g1[i];
    auto next = static_cast<std::size_t>((j + 1) % m);
    max_diff = std::max(max_diff, Rat(abs(g1[next] - g1[i])));
    max_diff = std::max(max_diff, Rat(abs(g2[next] - g2[i])));
  }
  rep.gap_integral = gap / m;
  rep.gap_bound = 4 * tau + Rat(4, static_cast<unsigned long>(m));
  rep.lipschitz = max_diff * m;  // discrete difference quotient
  rep.lipschitz_bound = 2 / tau;

  SandwichResult out{TorusGrid::constant(1, m, 0.0),
                     TorusGrid::constant(1, m, 0.0), rep};
  for (long j = 0; j < m; ++j) {
    out.f1.values[static_cast<std::size_t>(j)] = g1[static_cast<std::size_t>(j)].get_d();
    out.f2.values[static_cast<std::size_t>(j)] = g2[static_cast<std::size_t>(j)].get_d();
  }
  return out;
}

EquidistributionReport equidistribution_gap(const TorusGrid& f,
                                            const std::vector<Rat>& theta,
                                            const Progression1D& p, long n,
                                            double irrationality_a) {
  f.validate();
  if (static_cast<std::size_t>(f.d) != theta.size())
    throw PreconditionError("equidistribution_gap: theta dimension mismatch");
  IntSet pts = p.elements();
  if (pts.min() < 1 || pts.max() > n)
    throw PreconditionError("equidistribution_gap: P must lie in [N]");

  auto grid_index = [&](const Rat& x) {
    Rat frac = x - Rat(floor_rat(x));
    long idx = mpz_get_si(floor_rat(frac * f.m + Rat(1, 2)).get_mpz_t());
    return ((idx % f.m) + f.m) % f.m;
  };

  double mean = 0.0;
  for (const Int& e : pts) {
    Rat ne(e);
    if (f.d == 1) {
      mean += f.at(grid_index(ne * theta[0]));
    } else {
      mean += f.at(grid_index(ne * theta[0]), grid_index(ne * theta[1]));
    }
  }
  mean /= static_cast<double>(pts.size());

  double integral = 0.0;
  for (double v : f.values) integral += v;
  integral /= static_cast<double>(f.points());

  bool cert = certify_irrational(theta, Rat(irrationality_a), n).irrational;
  return {mean, integral, std::abs(mean - integral), cert};
}

}  // namespace addcomb
