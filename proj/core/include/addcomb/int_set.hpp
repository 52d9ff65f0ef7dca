#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "addcomb/numeric.hpp"

namespace addcomb {

// A finite set of integers, stored as a strictly increasing sequence.
// Immutable after construction; cheap to share.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<long> xs);

  // Sorts and deduplicates.
  static IntSet from_vector(std::vector<Int> xs);
  // Trusts the caller that xs is already strictly increasing (checked in
  // debug builds only).
  static IntSet from_sorted_unique(std::vector<Int> xs);
  // {1, 2, ..., n}
  static IntSet interval(long n);
  // {lo, lo+1, ..., hi}
  static IntSet range(const Int& lo, const Int& hi);

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  const Int& min() const;
  const Int& max() const;
  const Int& operator[](std::size_t i) const { return elems_[i]; }
  bool contains(const Int& x) const;
  bool contains_set(const IntSet& other) const;

  const std::vector<Int>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const IntSet& other) const = default;

  IntSet translated(const Int& u) const;   // A + u
  IntSet dilated(const Int& v) const;      // v * A, v != 0
  IntSet negated() const;                  // -A
  IntSet intersect(const IntSet& other) const;

 private:
  std::vector<Int> elems_;
};

// Gamma in A x A: a set of 0-based index pairs into an IntSet.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::vector<std::pair<std::size_t, std::size_t>> pairs);

  // All of A x A for an n-element set.
  static PairRelation full(std::size_t n);
  static PairRelation diagonal(std::size_t n);

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace addcomb
