#include "addcomb/covering.hpp"

#include "addcomb/errors.hpp"
#include "addcomb/sumsets.hpp"

namespace addcomb {
namespace {

// First element of `target` missing from `big`, if any.
CoverResult containment_verdict(const IntSet& target, const IntSet& big) {
  for (const Int& t : target) {
    if (!big.contains(t)) return {false, t};
  }
  return {true, std::nullopt};
}

long to_long(const Int& x) { return mpz_get_si(x.get_mpz_t()); }

}  // namespace

LevParams lev_parameters(const IntSet& x) {
  if (x.size() < 3)
    throw PreconditionError("lev_parameters: |X| must be >= 3");
  if (x.min() != 0)
    throw PreconditionError("lev_parameters: 0 must be in X (normalize first)");
  Int g = 0;
  for (const Int& e : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g != 1)
    throw PreconditionError("lev_parameters: gcd(X) must be 1 (normalize first)");

  const long l = to_long(x.max());
  const long card = static_cast<long>(x.size());
  const long k = (l - 1) / (card - 2);
  const long r = (k + 1) * (card - 2) - (l - 2);
  return {l, card, k, r};
}

LevReport lev_verify(const IntSet& x, std::optional<long> k_override) {
  LevParams p = lev_parameters(x);
  if (k_override) {
    const long k = *k_override;
    // The bracketing k <= (l-1)/(|X|-2) <= k+1 over the rationals.
    const long s = p.card_x - 2;
    if (!(k * s <= p.l - 1 && p.l - 1 <= (k + 1) * s))
      throw PreconditionError("lev_verify: k_override violates the bracketing");
    p.k = k;
    p.r = (k + 1) * s - (p.l - 2);
  }
  const long k = p.k, l = p.l, r = p.r;

  IntSet even = iterated_sumset(x, static_cast<unsigned>(2 * k));
  IntSet even_target = IntSet::range(Int(k * l - k * r), Int(k * l + k * r));
  bool even_ok = even.contains_set(even_target);

  IntSet odd = sumset(even, x);  // (2k+1)X
  IntSet odd_target = IntSet::range(Int(k * l - k * r), Int((k + 1) * l + k * r));
  bool odd_ok = odd.contains_set(odd_target);

  return {p, even_ok, odd_ok};
}

CoverResult cover_5_4(const IntSet& x, const Progression1D& p,
                      PrecheckMode mode) {
  IntSet pts = p.elements();
  if (mode == PrecheckMode::kStrict) {
    if (x.empty() || !pts.contains_set(x))
      throw PreconditionError("cover_5_4: X must be a non-empty subset of P");
    if (p.L < 12) throw PreconditionError("cover_5_4: |P| must be >= 12");
    if (2 * x.size() <= static_cast<std::size_t>(p.L))
      throw PreconditionError("cover_5_4: density must exceed 1/2");
  }
  if (x.empty()) throw PreconditionError("cover_5_4: empty X");
  return containment_verdict(pts, signed_combination(x, 5, 4));
}

CoverResult cover_9_8(const IntSet& x, PrecheckMode mode) {
  if (x.empty()) throw PreconditionError("cover_9_8: empty X");
  Progression1D p = smallest_containing_ap(x);
  if (mode == PrecheckMode::kStrict) {
    if (x.size() < 100) throw PreconditionError("cover_9_8: |X| must be >= 100");
    if (5 * x.size() <= 2 * static_cast<std::size_t>(p.L))
      throw PreconditionError("cover_9_8: density must exceed 2/5");
  }
  return containment_verdict(p.elements(), signed_combination(x, 9, 8));
}

CoverResult cover_41_40(const IntSet& x, const GAP2& q, PrecheckMode mode) {
  if (!is_proper(q).proper)
    throw PreconditionError("cover_41_40: Q must be proper");
  IntSet pts = q.elements();
  if (mode == PrecheckMode::kStrict) {
    if (x.empty() || !pts.contains_set(x))
      throw PreconditionError("cover_41_40: X must be a non-empty subset of Q");
    if (x.size() < 100)
      throw PreconditionError("cover_41_40: |X| must be >= 100");
    // |X| >= (1 - c)|Q| with c < 1/10, i.e. strictly above 9/10.
    if (10 * x.size() <= 9 * pts.size())
      throw PreconditionError("cover_41_40: density must exceed 9/10");
  }
  if (x.empty()) throw PreconditionError("cover_41_40: empty X");
  return containment_verdict(pts, signed_combination(x, 41, 40));
}

}  // namespace addcomb
