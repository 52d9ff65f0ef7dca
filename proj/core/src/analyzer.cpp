#include "addcomb/analyzer.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

constexpr long kApBudget = 1000000000L;
constexpr long kGap2Budget = 800000000L;
constexpr long kPopularSteps = 64;
constexpr long kSmallSteps = 32;

Int ceil_div(const Int& n, const Int& d) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

struct ApBest {
  bool found = false;
  Rat density;
  Int len;  // as Int for the comparison; fits in long when recorded
  Int step;
  Int a0;

  // density desc, length desc, step asc, base asc
  bool better(const Rat& d, const Int& l, const Int& v, const Int& b) const {
    if (!found) return true;
    if (d != density) return d > density;
    if (l != len) return l > len;
    if (v != step) return v < step;
    return b < a0;
  }
};

// All elements of one residue class mod v, as lattice positions (a - r) / v,
// already sorted. Window [lo, hi] covers positions lo..hi; its density is
// the number of class positions inside, over hi - lo + 1.
struct ResidueClass {
  Int r;
  std::vector<Int> pos;
};

}  // namespace

ApSearchResult densest_ap(const IntSet& a, long min_len, const Int& max_step) {
  if (min_len < 2) throw PreconditionError("densest_ap: min_len >= 2");
  if (max_step < 1) throw PreconditionError("densest_ap: max_step >= 1");
  if (a.empty()) throw PreconditionError("densest_ap: empty set");

  const Int lo = a.min();
  const Int hi = a.max();
  ApBest best;
  long budget = kApBudget;

  auto consider = [&](const Int& v, const ResidueClass& cls, const Int& wlo,
                      const Int& whi) {
    if (--budget < 0)
      throw ResourceError("densest_ap: window budget exhausted (partial)");
    Int len = whi - wlo + 1;
    auto first =
        std::lower_bound(cls.pos.begin(), cls.pos.end(), wlo);
    auto last = std::upper_bound(first, cls.pos.end(), whi);
    Int count(static_cast<long>(last - first));
    if (count == 0) return;
    Rat d(count, len);
    d.canonicalize();
    Int a0 = cls.r + wlo * v - v;  // first element is a0 + v
    if (best.better(d, len, v, a0)) {
      best.found = true;
      best.density = d;
      best.len = len;
      best.step = v;
      best.a0 = a0;
    }
  };

  for (Int v = 1; v <= max_step; ++v) {
    // Lattice extent within [lo, hi] for this step.
    if ((hi - lo) / v + 1 < min_len) break;  // shrinks as v grows
    std::map<Int, ResidueClass> classes;
    for (const Int& e : a) {
      Int r;
      mpz_mod(r.get_mpz_t(), e.get_mpz_t(), v.get_mpz_t());
      auto& cls = classes[r];
      cls.r = r;
      cls.pos.push_back((e - r) / v);
    }
    for (auto& [r, cls] : classes) {
      // Feasible position range keeping the whole window inside [lo, hi].
      Int pmin = ceil_div(lo - r, v);
      Int pmax = (hi - r) / v;
      if (pmax - pmin + 1 < min_len) continue;
      const auto& pos = cls.pos;
      // Windows with both endpoints on elements.
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i; j < pos.size(); ++j) {
          if (pos[j] - pos[i] + 1 < min_len) continue;
          consider(v, cls, pos[i], pos[j]);
        }
      // Minimum-length windows anchored at one element, clamped to range.
      for (const Int& p : pos) {
        Int s = std::min(Int(p), Int(pmax - (min_len - 1)));
        s = std::max(s, pmin);
        consider(v, cls, s, s + (min_len - 1));
        Int e = std::max(Int(p), Int(pmin + (min_len - 1)));
        e = std::min(e, pmax);
        consider(v, cls, e - (min_len - 1), e);
      }
    }
  }

  if (!best.found) return {false, Progression1D{Int(0), Int(1), 1}, Rat(0)};
  long len = static_cast<long>(best.len.get_si());
  return {true, Progression1D{best.a0, best.step, len}, best.density};
}

namespace {

// Proper iff the minimal integer relation l1*v1 = l2'*v2 falls outside the
// index box. Positive steps only.
bool gap2_proper_fast(const Int& v1, const Int& v2, long l1, long l2) {
  Int g = gcd(v1, v2);
  return v2 / g > l1 - 1 || v1 / g > l2 - 1;
}

std::vector<Int> gap2_step_candidates(const IntSet& a, const Int& cap1,
                                      const Int& cap2) {
  const auto n = a.size();
  if (n > 4000)
    throw ResourceError("densest_gap2: difference multiset too large");
  std::map<Int, long> counts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ++counts[a[j] - a[i]];
  std::vector<std::pair<long, Int>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [d, c] : counts) ranked.emplace_back(c, d);
  std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  const Int cap = std::max(cap1, cap2);
  std::vector<Int> steps;
  for (long v = 1; v <= kSmallSteps && v <= cap; ++v) steps.push_back(Int(v));
  long taken = 0;
  for (const auto& [c, d] : ranked) {
    if (taken >= kPopularSteps) break;
    ++taken;
    if (d <= cap && std::find(steps.begin(), steps.end(), d) == steps.end())
      steps.push_back(d);
  }
  std::sort(steps.begin(), steps.end());
  return steps;
}

}  // namespace

Gap2SearchResult densest_gap2(const IntSet& a, long min_size,
                              const Gap2Bounds& bounds) {
  if (min_size < 1) throw PreconditionError("densest_gap2: min_size >= 1");
  if (bounds.max_l < 1 || bounds.max_v1 < 1 || bounds.max_v2 < 1)
    throw PreconditionError("densest_gap2: positive bounds required");
  if (a.empty()) throw PreconditionError("densest_gap2: empty set");

  const long max_l = bounds.max_l;
  Gap2SearchResult out{false, GAP2{Int(0), Int(1), Int(2), 1, 1}, Rat(0),
                       true};
  auto better = [&](const Rat& d, long size, const Int& v1, const Int& v2,
                    const Int& a0) {
    if (!out.found) return true;
    if (d != out.density) return d > out.density;
    long cur = out.q.nominal_size();
    if (size != cur) return size > cur;
    if (v1 != out.q.a1) return v1 < out.q.a1;
    if (v2 != out.q.a2) return v2 < out.q.a2;
    return a0 < out.q.a0;
  };

  std::vector<Int> steps =
      gap2_step_candidates(a, bounds.max_v1, bounds.max_v2);

  // Fast path when everything fits in machine words.
  const bool machine =
      a.min().fits_slong_p() && a.max().fits_slong_p() &&
      (steps.empty() || steps.back().fits_slong_p());
  std::unordered_set<long> al;
  std::vector<long> av;
  if (machine) {
    al.reserve(a.size() * 2);
    av.reserve(a.size());
    for (const Int& e : a) {
      al.insert(e.get_si());
      av.push_back(e.get_si());
    }
  }

  long budget = kGap2Budget;
  std::vector<long> prefix(static_cast<std::size_t>((max_l + 1) * (max_l + 1)),
                           0);
  auto pref = [&](long i, long j) -> long& {
    return prefix[static_cast<std::size_t>(i * (max_l + 1) + j)];
  };

  // With a symmetric cap the two step orders describe the same sets, so one
  // order suffices; the grid scan already covers both shape assignments.
  const bool symmetric = bounds.max_v1 == bounds.max_v2;
  for (const Int& v1 : steps) {
    if (v1 > bounds.max_v1) continue;
    for (const Int& v2 : steps) {
      if (v2 > bounds.max_v2 || v1 == v2) continue;
      if (symmetric && v1 > v2) continue;
      const long v1l = machine ? v1.get_si() : 0;
      const long v2l = machine ? v2.get_si() : 0;
      for (std::size_t ai = 0; ai < a.size(); ++ai) {
        budget -= max_l * max_l;
        if (budget < 0) {
          out.exhaustive = false;
          return out;
        }
        // Corner anchor: cell (1, 1) is the element a[ai].
        for (long l1 = 1; l1 <= max_l; ++l1)
          for (long l2 = 1; l2 <= max_l; ++l2) {
            bool in;
            if (machine) {
              long val = av[ai] + (l1 - 1) * v1l + (l2 - 1) * v2l;
              in = al.count(val) != 0;
            } else {
              in = a.contains(a[ai] + (l1 - 1) * v1 + (l2 - 1) * v2);
            }
            pref(l1, l2) = pref(l1 - 1, l2) + pref(l1, l2 - 1) -
                           pref(l1 - 1, l2 - 1) + (in ? 1 : 0);
          }
        Int a0 = a[ai] - v1 - v2;
        for (long l1 = 1; l1 <= max_l; ++l1)
          for (long l2 = 1; l2 <= max_l; ++l2) {
            long size = l1 * l2;
            if (size < min_size) continue;
            if (!gap2_proper_fast(v1, v2, l1, l2)) continue;
            Rat d(pref(l1, l2), size);
            d.canonicalize();
            if (better(d, size, v1, v2, a0)) {
              out.found = true;
              out.q = GAP2{a0, v1, v2, l1, l2};
              out.density = d;
            }
          }
      }
    }
  }
  return out;
}

StructureReport dichotomy_check(const IntSet& a, const Rat& delta,
                                const Rat& eps, const Rat& min_frac) {
  if (a.empty()) throw PreconditionError("dichotomy_check: empty set");
  if (!(delta > 0 && delta < 1) || !(eps > 0 && eps < 1))
    throw PreconditionError("dichotomy_check: delta, eps in (0, 1)");
  if (!(min_frac > 0 && min_frac <= 1))
    throw PreconditionError("dichotomy_check: min_frac in (0, 1]");

  StructureReport rep{};
  rep.delta = delta;
  rep.eps = eps;
  rep.min_frac = min_frac;
  rep.sigma = doubling(a, DoublingMode::kPlus);

  if (rep.sigma > 4 + delta) {
    rep.branch = Branch::kExpansion;
    return rep;
  }

  Rat target = min_frac * static_cast<unsigned long>(a.size());
  long min_len =
      static_cast<long>(ceil_div(target.get_num(), target.get_den()).get_si());
  min_len = std::max(min_len, 2L);

  ApSearchResult ap = densest_ap(a, min_len, Int(1024));
  if (ap.found && ap.density >= Rat(1, 2) - eps) {
    rep.branch = Branch::kApDense;
    rep.witness = ap.p;
    rep.density = ap.density;
    return rep;
  }

  Gap2SearchResult gap = densest_gap2(
      a, min_len, Gap2Bounds{Int(1) << 62, Int(1) << 62, 16});
  if (gap.found && gap.density >= 1 - eps) {
    rep.branch = Branch::kGapDense;
    rep.witness = gap.q;
    rep.density = gap.density;
    return rep;
  }

  rep.branch = Branch::kInconclusive;
  if (gap.found && (!ap.found || gap.density > ap.density)) {
    rep.witness = gap.q;
    rep.density = gap.density;
  } else if (ap.found) {
    rep.witness = ap.p;
    rep.density = ap.density;
  }
  return rep;
}

}  // namespace addcomb
