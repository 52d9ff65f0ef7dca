#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "doctest.h"

using namespace addcomb;

namespace {

GridFunction random_function(long n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  GridFunction f = GridFunction::constant(n, 0.0);
  for (double& v : f.values) v = unif(rng);
  return f;
}

Int energy_reference(long n) {
  // Sum of squared representation counts of [N] + [N].
  Int total = 0;
  for (long s = 2; s <= 2 * n; ++s) {
    long r = std::min(s - 1, 2 * n + 1 - s);
    total += Int(r) * r;
  }
  return total;
}

}  // namespace

TEST_CASE("l2 norm") {
  CHECK(l2_norm(GridFunction::constant(64, 1.0)) == doctest::Approx(1.0));
  CHECK(l2_norm(GridFunction::constant(64, 0.0)) == doctest::Approx(0.0));
  GridFunction half = GridFunction::constant(64, 0.0);
  for (long i = 0; i < 32; ++i) half.values[static_cast<std::size_t>(i)] = 1.0;
  CHECK(l2_norm(half) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("quadruple counts") {
  CHECK(quadruple_count(1) == 1);
  CHECK(quadruple_count(2) == 6);
  CHECK(quadruple_count(10) == 670);
  for (long n = 1; n <= 200; ++n)
    CHECK(quadruple_count(n) == energy_reference(n));
}

TEST_CASE("U2 norm endpoints") {
  CHECK(u2_norm_direct(GridFunction::constant(32, 1.0)) ==
        doctest::Approx(1.0));
  CHECK(u2_norm_direct(GridFunction::constant(32, 0.0)) ==
        doctest::Approx(0.0));
  CHECK(u2_norm_fourier(GridFunction::constant(32, 1.0)) ==
        doctest::Approx(1.0));
  CHECK(u2_norm_fourier(GridFunction::constant(48, 0.0)) ==
        doctest::Approx(0.0));
}

TEST_CASE("direct and Fourier paths agree") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<long> nd(1, 256);
    GridFunction f = random_function(nd(rng), rng);
    double d = u2_norm_direct(f);
    double ff = u2_norm_fourier(f);
    CHECK(std::abs(d - ff) <= 1e-9 * std::max(1.0, std::abs(d)));
  }

  // Alternating signs form a character, so the norm stays at 1: every
  // quadruple x1+x2=x3+x4 contributes +1 by parity.
  GridFunction alt = GridFunction::constant(64, 0.0);
  for (long i = 1; i <= 64; ++i)
    alt.values[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? 1.0 : -1.0;
  double d = u2_norm_direct(alt);
  CHECK(d == doctest::Approx(1.0));
  CHECK(std::abs(d - u2_norm_fourier(alt)) <= 1e-9);

  // A lone spike has almost no quadruples.
  GridFunction spike = GridFunction::constant(64, 0.0);
  spike.values[10] = 1.0;
  double ds = u2_norm_direct(spike);
  CHECK(ds < 0.5);
  CHECK(std::abs(ds - u2_norm_fourier(spike)) <= 1e-9);
}

TEST_CASE("U2 norm bounded by sup norm") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    GridFunction f = GridFunction::constant(100, 0.0);
    for (double& v : f.values) v = unif(rng);
    CHECK(u2_norm_direct(f) <= 1.0 + 1e-12);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(u2_norm_direct(GridFunction::constant(8192, 1.0)),
                  ResourceError);
  GridFunction bad{4, {0.0, 3.0, 0.0, 0.0}};
  CHECK_THROWS_AS(l2_norm(bad), StructuralError);
}

TEST_CASE("progression mean bound diagnostics") {
  GridFunction zero = GridFunction::constant(100, 0.0);
  Progression1D p{Int(0), Int(1), 100};
  auto rep0 = progression_mean_bound_check(zero, p, 0.5);
  CHECK(rep0.lhs == doctest::Approx(0.0));

  GridFunction one = GridFunction::constant(100, 1.0);
  auto rep1 = progression_mean_bound_check(one, p, 0.5);
  CHECK(rep1.lhs == doctest::Approx(1.0));
  CHECK(rep1.rhs == doctest::Approx(2.0));

  CHECK_THROWS_AS(
      progression_mean_bound_check(one, Progression1D{Int(0), Int(1), 10},
                                   0.5),
      PreconditionError);

  // Empirical constant stays modest across seeded +-1 functions.
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<int> coin(0, 1);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    GridFunction f = GridFunction::constant(256, 0.0);
    for (double& v : f.values) v = coin(rng) ? 1.0 : -1.0;
    Progression1D evens{Int(0), Int(2), 128};
    auto rep = progression_mean_bound_check(f, evens, 0.5);
    worst = std::max(worst, rep.ratio);
  }
  CHECK(worst <= 10.0);
}
