#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "addcomb/analyzer.hpp"
#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"
#include "doctest.h"

using namespace addcomb;

namespace {

IntSet a1_set(long n) {
  std::vector<Int> xs;
  Int big = Int(1) << 100;
  for (const Int& base : {Int(0), Int(10 * n), big})
    for (long i = 1; i <= n; ++i) xs.push_back(base + i);
  return IntSet::from_vector(std::move(xs));
}

// Exhaustive densest-AP reference: every (base, step, length) with all
// elements inside [min, max]. Tiny ranges only.
std::pair<Progression1D, Rat> densest_ap_reference(const IntSet& a,
                                                   long min_len,
                                                   long max_step) {
  long lo = static_cast<long>(a.min().get_si());
  long hi = static_cast<long>(a.max().get_si());
  bool found = false;
  Progression1D best{Int(0), Int(1), 1};
  Rat best_d(0);
  for (long v = 1; v <= max_step; ++v)
    for (long first = lo; first <= hi; ++first)
      for (long len = min_len; first + (len - 1) * v <= hi; ++len) {
        long count = 0;
        for (long i = 0; i < len; ++i)
          if (a.contains(Int(first + i * v))) ++count;
        Rat d(count, len);
        d.canonicalize();
        Progression1D p{Int(first - v), Int(v), len};
        bool better =
            !found || d > best_d || (d == best_d && len > best.L) ||
            (d == best_d && len == best.L && v < best.v) ||
            (d == best_d && len == best.L && v == best.v && p.a0 < best.a0);
        if (better) {
          found = true;
          best = p;
          best_d = d;
        }
      }
  REQUIRE(found);
  return {best, best_d};
}

IntSet percent_subset(const IntSet& full, double keep, std::mt19937_64& rng) {
  std::vector<Int> pool(full.begin(), full.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(keep * static_cast<double>(pool.size())));
  return IntSet::from_vector(std::move(pool));
}

}  // namespace

TEST_CASE("densest_ap basics") {
  auto interval = densest_ap(IntSet::interval(100), 50, Int(8));
  REQUIRE(interval.found);
  CHECK(interval.density == 1);
  CHECK(interval.p.L == 100);
  CHECK(interval.p.v == 1);
  CHECK(interval.p.elements() == IntSet::interval(100));

  std::vector<Int> ev;
  for (long i = 2; i <= 200; i += 2) ev.push_back(Int(i));
  auto evens = densest_ap(IntSet::from_vector(std::move(ev)), 50, Int(4));
  REQUIRE(evens.found);
  CHECK(evens.density == 1);
  CHECK(evens.p.v == 2);
  CHECK(evens.p.L == 100);
}

TEST_CASE("densest_ap beats the planted density") {
  std::mt19937_64 rng(81);
  std::bernoulli_distribution coin(0.55);
  std::vector<Int> xs;
  for (long i = 1; i <= 200; ++i)
    if (coin(rng)) xs.push_back(Int(i));
  IntSet a = IntSet::from_vector(std::move(xs));
  auto res = densest_ap(a, static_cast<long>(a.size() / 2), Int(16));
  REQUIRE(res.found);
  CHECK(res.density >= Rat(static_cast<unsigned long>(a.size()), 200));
}

TEST_CASE("densest_ap agrees with the exhaustive reference") {
  std::mt19937_64 rng(82);
  std::uniform_int_distribution<long> val(0, 39);
  std::uniform_int_distribution<long> count(4, 18);
  for (int t = 0; t < 150; ++t) {
    std::vector<Int> xs;
    long n = count(rng);
    for (long i = 0; i < n; ++i) xs.push_back(Int(val(rng)));
    IntSet a = IntSet::from_vector(std::move(xs));
    if (Int(a.max() - a.min()) + 1 < 3) continue;
    auto fast = densest_ap(a, 3, Int(8));
    auto [refp, refd] = densest_ap_reference(a, 3, 8);
    REQUIRE(fast.found);
    CHECK(fast.density == refd);
    CHECK(fast.p.L == refp.L);
    CHECK(fast.p.v == refp.v);
    CHECK(fast.p.a0 == refp.a0);
  }
}

TEST_CASE("densest_gap2 basics") {
  GAP2 q{Int(0), Int(1), Int(1000), 10, 10};
  IntSet full = q.elements();
  auto res = densest_gap2(full, 100, Gap2Bounds{Int(1) << 40, Int(1) << 40, 12});
  REQUIRE(res.found);
  CHECK(res.density == 1);
  CHECK(res.q.nominal_size() >= 100);
  CHECK(density_on(full, AnyProgression(res.q)) == 1);

  std::mt19937_64 rng(83);
  IntSet most = percent_subset(full, 0.95, rng);
  auto res95 =
      densest_gap2(most, 90, Gap2Bounds{Int(1) << 40, Int(1) << 40, 12});
  REQUIRE(res95.found);
  CHECK(res95.density >= Rat(95, 100));

  // A single point still sits inside small boxes, at density 1/size.
  auto lone = densest_gap2(IntSet{1}, 4, Gap2Bounds{Int(100), Int(100), 8});
  REQUIRE(lone.found);
  CHECK(lone.density == Rat(1, 4));

  // min_size beyond the side caps leaves nothing to report.
  auto none = densest_gap2(IntSet{1}, 100, Gap2Bounds{Int(100), Int(100), 8});
  CHECK(!none.found);
}

TEST_CASE("trichotomy fixture: A1 is AP-dense") {
  auto rep = dichotomy_check(a1_set(100), Rat(1, 20), Rat(1, 10), Rat(1, 4));
  CHECK(rep.sigma == Rat(199, 50));
  REQUIRE(rep.branch == Branch::kApDense);
  const auto& p = std::get<Progression1D>(*rep.witness);
  CHECK(p.L == 100);
  CHECK(*rep.density == 1);
}

TEST_CASE("trichotomy fixture: dense GAP subset is GAP-dense") {
  GAP2 q{Int(0), Int(1), Int(1000), 12, 12};
  std::mt19937_64 rng(84);
  IntSet a = percent_subset(q.elements(), 0.95, rng);
  auto rep = dichotomy_check(a, Rat(1, 20), Rat(1, 10), Rat(1, 4));
  REQUIRE(rep.branch == Branch::kGapDense);
  const auto& w = std::get<GAP2>(*rep.witness);
  CHECK(is_proper(w).proper);
  CHECK(*rep.density >= Rat(9, 10));
  CHECK(density_on(a, *rep.witness) == *rep.density);
}

TEST_CASE("trichotomy fixture: random sparse set expands") {
  std::mt19937_64 rng(85);
  std::uniform_int_distribution<long> val(1, 1000000000L);
  std::vector<Int> xs;
  for (int i = 0; i < 300; ++i) xs.push_back(Int(val(rng)));
  auto rep = dichotomy_check(IntSet::from_vector(std::move(xs)), Rat(1, 20),
                             Rat(1, 10), Rat(1, 4));
  CHECK(rep.branch == Branch::kExpansion);
  CHECK(rep.sigma > Rat(81, 20));
}

TEST_CASE("reports re-verify from scratch") {
  GAP2 q{Int(0), Int(1), Int(1000), 12, 12};
  std::mt19937_64 rng(86);
  IntSet a = percent_subset(q.elements(), 0.95, rng);
  auto rep = dichotomy_check(a, Rat(1, 20), Rat(1, 10), Rat(1, 4));
  REQUIRE(rep.witness.has_value());
  Rat recomputed = density_on(a, *rep.witness);
  CHECK(recomputed == *rep.density);
  std::size_t wsize = elements_of(*rep.witness).size();
  CHECK(Rat(static_cast<unsigned long>(wsize)) >=
        rep.min_frac * static_cast<unsigned long>(a.size()));
}

TEST_CASE("dichotomy is affine-equivariant") {
  std::mt19937_64 rng(87);
  GAP2 q{Int(0), Int(1), Int(1000), 12, 12};
  IntSet a = percent_subset(q.elements(), 0.95, rng);
  auto base = dichotomy_check(a, Rat(1, 20), Rat(1, 10), Rat(1, 4));
  auto shifted = dichotomy_check(a.translated(Int(777)), Rat(1, 20),
                                 Rat(1, 10), Rat(1, 4));
  CHECK(base.branch == shifted.branch);
  CHECK(base.sigma == shifted.sigma);
  CHECK(*base.density == *shifted.density);
  IntSet w1 = elements_of(*base.witness).translated(Int(777));
  IntSet w2 = elements_of(*shifted.witness);
  CHECK(w1 == w2);

  auto dilated = dichotomy_check(a.dilated(Int(3)), Rat(1, 20), Rat(1, 10),
                                 Rat(1, 4));
  CHECK(base.branch == dilated.branch);
  CHECK(*base.density == *dilated.density);
  CHECK(elements_of(*base.witness).dilated(Int(3)) ==
        elements_of(*dilated.witness));
}

TEST_CASE("gap_dense witness lands inside 41A - 40A") {
  GAP2 q{Int(0), Int(1), Int(1000), 12, 12};
  std::mt19937_64 rng(88);
  IntSet a = percent_subset(q.elements(), 0.95, rng);
  auto rep = dichotomy_check(a, Rat(1, 20), Rat(1, 10), Rat(1, 4));
  REQUIRE(rep.branch == Branch::kGapDense);
  const auto& w = std::get<GAP2>(*rep.witness);
  IntSet dense = a.intersect(elements_of(*rep.witness));
  auto cover = cover_41_40(dense, w, PrecheckMode::kAdvisory);
  CHECK(cover.holds);
  CHECK(signed_combination(a, 41, 40).contains_set(elements_of(*rep.witness)));
}
