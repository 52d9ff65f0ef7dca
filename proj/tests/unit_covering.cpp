#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/freiman.hpp"
#include "addcomb/sumsets.hpp"
#include "doctest.h"

using namespace addcomb;

namespace {

IntSet evens(long l) {
  std::vector<Int> xs;
  for (long i = 1; i <= l; ++i) xs.push_back(Int(2 * i));
  return IntSet::from_vector(std::move(xs));
}

// Random subset of `universe` of the given size, always keeping `forced`.
IntSet random_subset(const IntSet& universe, std::size_t size,
                     const IntSet& forced, std::mt19937_64& rng) {
  std::vector<Int> pool(universe.begin(), universe.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Int> xs(forced.begin(), forced.end());
  for (const Int& e : pool) {
    if (xs.size() >= size) break;
    if (!forced.contains(e)) xs.push_back(e);
  }
  return IntSet::from_vector(std::move(xs));
}

}  // namespace

TEST_CASE("lev parameters") {
  auto p1 = lev_parameters(IntSet{0, 1, 3});
  CHECK(p1.l == 3);
  CHECK(p1.k == 2);
  CHECK(p1.r == 2);  // (k+1)(|X|-2) - (l-2) = 3*1 - 1

  auto p2 = lev_parameters(IntSet::range(Int(0), Int(9)));
  CHECK(p2.k == 1);  // full interval: ratio (l-1)/(|X|-2) = 1

  auto p3 = lev_parameters(IntSet{0, 1, 2, 7});
  CHECK(p3.k == 3);
  CHECK(p3.r == 3);  // 4*2 - 5

  CHECK_THROWS_AS(lev_parameters(IntSet{0, 1}), PreconditionError);
  CHECK_THROWS_AS(lev_parameters(IntSet{0, 2, 4}), PreconditionError);
  CHECK_THROWS_AS(lev_parameters(IntSet{1, 2, 3}), PreconditionError);
}

TEST_CASE("lev verification on the worked cases") {
  auto r1 = lev_verify(IntSet{0, 1, 3});
  CHECK(r1.contains_even);  // 4X contains [2, 10]
  CHECK(r1.contains_odd);
  CHECK(iterated_sumset(IntSet{0, 1, 3}, 4).contains_set(
      IntSet::range(Int(2), Int(10))));

  auto r2 = lev_verify(IntSet{0, 1, 2, 7});
  CHECK(r2.contains_even);  // 6X contains [21-9, 21+9]
  CHECK(r2.contains_odd);
  CHECK(iterated_sumset(IntSet{0, 1, 2, 7}, 6).contains_set(
      IntSet::range(Int(12), Int(30))));
}

TEST_CASE("lev exhaustive for small l, both k at integer ratios") {
  for (long l = 3; l <= 10; ++l) {
    for (unsigned long mask = 0; mask < (1UL << (l - 1)); ++mask) {
      std::vector<Int> xs{Int(0), Int(l)};
      for (long i = 1; i < l; ++i)
        if (mask & (1UL << (i - 1))) xs.push_back(Int(i));
      IntSet x = IntSet::from_vector(std::move(xs));
      if (x.size() < 3) continue;
      Int g = 0;
      for (const Int& e : x) g = gcd(g, e);
      if (g != 1) continue;
      auto rep = lev_verify(x);
      CHECK(rep.contains_even);
      CHECK(rep.contains_odd);
      auto params = lev_parameters(x);
      if ((params.l - 1) % (params.card_x - 2) == 0 && params.k > 1) {
        auto alt = lev_verify(x, params.k - 1);
        CHECK(alt.contains_even);
        CHECK(alt.contains_odd);
      }
    }
  }
}

TEST_CASE("cover_5_4 on the worked example") {
  // P = [0..12], X = {3} u {5..12}: 9/13 > 1/2.
  std::vector<Int> xs{Int(3)};
  for (long i = 5; i <= 12; ++i) xs.push_back(Int(i));
  IntSet x = IntSet::from_vector(std::move(xs));
  Progression1D p{Int(-1), Int(1), 13};
  auto res = cover_5_4(x, p);
  CHECK(res.holds);

  CHECK(cover_5_4(p.elements(), p).holds);
}

TEST_CASE("cover_5_4 sharpness at density exactly 1/2") {
  for (long l : {6L, 10L, 20L}) {
    IntSet x = evens(l);
    Progression1D p{Int(0), Int(1), 2 * l};
    CHECK_THROWS_AS(cover_5_4(x, p), PreconditionError);
    auto res = cover_5_4(x, p, PrecheckMode::kAdvisory);
    REQUIRE(!res.holds);
    CHECK(*res.witness == 1);
  }
}

TEST_CASE("cover_9_8 basics") {
  std::mt19937_64 rng(41);
  IntSet universe = IntSet::range(Int(0), Int(249));
  IntSet forced{0, 249, 1};  // gcd 1 guaranteed
  IntSet x = random_subset(universe, 101, forced, rng);
  CHECK(cover_9_8(x).holds);

  CHECK(cover_9_8(IntSet::range(Int(0), Int(99))).holds);

  IntSet small = random_subset(universe, 99, forced, rng);
  CHECK_THROWS_AS(cover_9_8(small), PreconditionError);
}

TEST_CASE("cover_41_40 basics") {
  GAP2 q{Int(0), Int(1), Int(1000), 12, 12};
  REQUIRE(is_proper(q).proper);
  IntSet full = q.elements();
  std::mt19937_64 rng(42);
  IntSet x = random_subset(full, 130, IntSet{}, rng);
  CHECK(cover_41_40(x, q).holds);
  CHECK(cover_41_40(full, q).holds);

  GAP2 improper{Int(0), Int(1), Int(2), 5, 2};
  CHECK_THROWS_AS(cover_41_40(improper.elements(), improper),
                  PreconditionError);
}

TEST_CASE("seeded cover suites produce no false verdicts") {
  std::mt19937_64 rng(43);

  // 5X - 4X: random X above half density in a random interval.
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<long> len(12, 60);
    long l = len(rng);
    Progression1D p{Int(-1), Int(1), l};
    std::uniform_int_distribution<long> extra(l / 2 + 1, l);
    IntSet x = random_subset(p.elements(), extra(rng), IntSet{}, rng);
    if (2 * x.size() <= static_cast<std::size_t>(l)) continue;
    auto res = cover_5_4(x, p);
    CHECK(res.holds);
  }

  // 9X - 8X: density > 2/5 in the smallest containing AP.
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<long> span(120, 240);
    long l = span(rng);
    IntSet universe = IntSet::range(Int(0), Int(l));
    IntSet x = random_subset(universe, 110, IntSet{0, 1}, rng);
    auto ap = smallest_containing_ap(x);
    if (Rat(x.size()) * 5 <= Rat(ap.L) * 2) continue;
    CHECK(cover_9_8(x).holds);
  }

  // 41X - 40X: >= 90% of a random proper GAP2.
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<long> step2(200, 2000);
    GAP2 q{Int(0), Int(1), Int(step2(rng)), 11, 11};
    if (!is_proper(q).proper) continue;
    IntSet x = random_subset(q.elements(), 112, IntSet{}, rng);
    CHECK(cover_41_40(x, q).holds);
  }
}

TEST_CASE("witness soundness and cover monotonicity") {
  IntSet x = evens(10);
  Progression1D p{Int(0), Int(1), 20};
  auto res = cover_5_4(x, p, PrecheckMode::kAdvisory);
  REQUIRE(!res.holds);
  CHECK(p.elements().contains(*res.witness));
  CHECK(!signed_combination(x, 5, 4).contains(*res.witness));

  // Adding the odd numbers makes the cover hold.
  std::mt19937_64 rng(44);
  IntSet bigger = random_subset(p.elements(), 18, x, rng);
  CHECK(cover_5_4(bigger, p, PrecheckMode::kAdvisory).holds);
}
