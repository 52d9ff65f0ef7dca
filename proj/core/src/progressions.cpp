#include "addcomb/progressions.hpp"

#include <algorithm>
#include <map>

#include "addcomb/errors.hpp"

namespace addcomb {

IntSet Progression1D::elements() const {
  if (v < 1 || L < 1) throw PreconditionError("Progression1D: v, L must be >= 1");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(L));
  for (long l = 1; l <= L; ++l) out.push_back(a0 + v * l);
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet GAP2::elements() const {
  if (L1 < 1 || L2 < 1) throw PreconditionError("GAP2: L1, L2 must be >= 1");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(L1) * static_cast<std::size_t>(L2));
  for (long l1 = 1; l1 <= L1; ++l1)
    for (long l2 = 1; l2 <= L2; ++l2) out.push_back(a0 + a1 * l1 + a2 * l2);
  return IntSet::from_vector(std::move(out));
}

IntSet elements_of(const AnyProgression& p) {
  return std::visit([](const auto& q) { return q.elements(); }, p);
}

PropernessResult is_proper(const GAP2& q) {
  if (q.L1 < 1 || q.L2 < 1) throw PreconditionError("GAP2: L1, L2 must be >= 1");
  std::map<Int, std::pair<long, long>> seen;
  for (long l1 = 1; l1 <= q.L1; ++l1) {
    for (long l2 = 1; l2 <= q.L2; ++l2) {
      Int val = q.a0 + q.a1 * l1 + q.a2 * l2;
      auto [it, inserted] = seen.emplace(val, std::make_pair(l1, l2));
      if (!inserted)
        return {false, std::make_pair(it->second, std::make_pair(l1, l2))};
    }
  }
  return {true, std::nullopt};
}

Progression1D smallest_containing_ap(const IntSet& x) {
  if (x.empty()) throw PreconditionError("smallest_containing_ap: empty set");
  if (x.size() == 1) return {x.min() - 1, Int(1), 1};
  Int g = 0;
  for (const Int& e : x) {
    Int d = e - x.min();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  Int span = (x.max() - x.min()) / g;
  long len = static_cast<long>(mpz_get_ui(span.get_mpz_t())) + 1;
  // Base shifted by one step so the 1-based index range starts at min X.
  return {x.min() - g, g, len};
}

Rat density_on(const IntSet& a, const AnyProgression& p) {
  IntSet pts = elements_of(p);
  if (pts.empty()) throw PreconditionError("density_on: empty progression");
  std::size_t hits = a.intersect(pts).size();
  Rat q(static_cast<unsigned long>(hits), static_cast<unsigned long>(pts.size()));
  q.canonicalize();
  return q;
}

}  // namespace addcomb
