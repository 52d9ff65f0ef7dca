#include "addcomb/freiman.hpp"

#include <cmath>

#include "addcomb/errors.hpp"

namespace addcomb {

Int AffineMap::forward(const Int& x) const {
  Int d = x - u;
  Int q;
  mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
  return q;
}

Int AffineMap::backward(const Int& y) const { return u + v * y; }

std::pair<IntSet, AffineMap> normalize_affine(const IntSet& x) {
  if (x.empty()) throw PreconditionError("normalize_affine: empty set");
  if (x.size() == 1) {
    AffineMap map{x.min(), Int(1)};
    return {IntSet{0}, map};
  }
  Int g = 0;
  for (const Int& e : x) {
    Int d = e - x.min();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  AffineMap map{x.min(), g};
  std::vector<Int> out;
  out.reserve(x.size());
  for (const Int& e : x) out.push_back(map.forward(e));
  return {IntSet::from_sorted_unique(std::move(out)), map};
}

IsomorphismCheck verify_freiman_isomorphism(const IntSet& a, const IntSet& b,
                                            const std::vector<std::size_t>& phi,
                                            unsigned k, std::uint64_t budget) {
  const std::size_t n = a.size();
  if (b.size() != n || phi.size() != n)
    throw PreconditionError("verify_freiman_isomorphism: |A| != |B|");
  if (k == 0) throw PreconditionError("verify_freiman_isomorphism: k >= 1");
  for (std::size_t i : phi)
    if (i >= n) throw StructuralError("verify_freiman_isomorphism: bad index map");

  const unsigned arity = 2 * k;
  double total = std::pow(static_cast<double>(n), static_cast<double>(arity));
  if (total > static_cast<double>(budget))
    throw ResourceError("verify_freiman_isomorphism: |A|^(2k) exceeds budget");

  // Odometer over index vectors, lexicographic; early exit on first violation.
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    Int lhs_a = 0, rhs_a = 0, lhs_b = 0, rhs_b = 0;
    for (unsigned t = 0; t < k; ++t) {
      lhs_a += a[idx[t]];
      lhs_b += b[phi[idx[t]]];
    }
    for (unsigned t = k; t < arity; ++t) {
      rhs_a += a[idx[t]];
      rhs_b += b[phi[idx[t]]];
    }
    if ((lhs_a == rhs_a) != (lhs_b == rhs_b)) return {false, idx};

    unsigned pos = arity;
    while (pos > 0 && idx[pos - 1] == n - 1) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return {true, std::nullopt};
}

}  // namespace addcomb
