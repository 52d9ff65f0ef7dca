#include "addcomb/int_set.hpp"

#include <algorithm>
#include <cassert>

#include "addcomb/errors.hpp"

namespace addcomb {

IntSet::IntSet(std::initializer_list<long> xs) {
  std::vector<Int> v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  *this = from_vector(std::move(v));
}

IntSet IntSet::from_vector(std::vector<Int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  IntSet s;
  s.elems_ = std::move(xs);
  return s;
}

IntSet IntSet::from_sorted_unique(std::vector<Int> xs) {
#ifndef NDEBUG
  for (std::size_t i = 1; i < xs.size(); ++i) assert(xs[i - 1] < xs[i]);
#endif
  IntSet s;
  s.elems_ = std::move(xs);
  return s;
}

IntSet IntSet::interval(long n) {
  std::vector<Int> v;
  v.reserve(n > 0 ? static_cast<std::size_t>(n) : 0);
  for (long i = 1; i <= n; ++i) v.emplace_back(i);
  return from_sorted_unique(std::move(v));
}

IntSet IntSet::range(const Int& lo, const Int& hi) {
  std::vector<Int> v;
  for (Int x = lo; x <= hi; ++x) v.push_back(x);
  return from_sorted_unique(std::move(v));
}

const Int& IntSet::min() const {
  if (empty()) throw PreconditionError("min() of empty set");
  return elems_.front();
}

const Int& IntSet::max() const {
  if (empty()) throw PreconditionError("max() of empty set");
  return elems_.back();
}

bool IntSet::contains(const Int& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool IntSet::contains_set(const IntSet& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end());
}

IntSet IntSet::translated(const Int& u) const {
  std::vector<Int> v;
  v.reserve(size());
  for (const Int& x : elems_) v.push_back(x + u);
  return from_sorted_unique(std::move(v));
}

IntSet IntSet::dilated(const Int& v) const {
  if (v == 0) throw PreconditionError("dilation by zero");
  std::vector<Int> out;
  out.reserve(size());
  for (const Int& x : elems_) out.push_back(x * v);
  if (v < 0) std::reverse(out.begin(), out.end());
  return from_sorted_unique(std::move(out));
}

IntSet IntSet::negated() const { return dilated(Int(-1)); }

IntSet IntSet::intersect(const IntSet& other) const {
  std::vector<Int> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
  return from_sorted_unique(std::move(out));
}

PairRelation::PairRelation(
    std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);
}

PairRelation PairRelation::full(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  p.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.emplace_back(i, j);
  return PairRelation(std::move(p));
}

PairRelation PairRelation::diagonal(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, i);
  return PairRelation(std::move(p));
}

}  // namespace addcomb
