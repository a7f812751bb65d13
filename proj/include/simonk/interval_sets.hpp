#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "simonk/word.hpp"

namespace simonk {

using Interval = std::pair<Pos, Pos>;

// Partition of [1:n] into intervals supporting find(u) -> enclosing interval
// and split(u) -> cut between u and u+1. Splitting at an existing border is a
// no-op. find is O(1); each split repoints the smaller half, so total split
// work is O(n log n) worst case and near-linear when cuts slice small pieces.
class IntervalSplitFind {
 public:
  explicit IntervalSplitFind(Pos n);

  Pos size() const { return n_; }
  Interval find(Pos u) const;
  void split(Pos u);

 private:
  void check_range(Pos u) const;

  Pos n_;
  std::vector<std::int32_t> rec_of_;  // position (1-based) -> record id
  std::vector<Pos> lo_, hi_;          // per record
};

// Partition of [1:n] into intervals supporting find(u) and union of the
// interval containing u with the interval directly to its right. merge(u)
// requires u to be a border (the right endpoint of a non-rightmost interval).
// DSU with union by size, path compression, and (lo, hi) kept at the root.
class IntervalUnionFind {
 public:
  explicit IntervalUnionFind(Pos n);

  Pos size() const { return n_; }
  Interval find(Pos u);
  // Merges [.., u] with [u+1, ..]. Throws std::invalid_argument unless u is
  // the right endpoint of an interval and u < n.
  void merge(Pos u);

 private:
  std::int32_t root(std::int32_t v);
  void check_range(Pos u) const;

  Pos n_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
  std::vector<Pos> lo_, hi_;  // valid at roots
};

}  // namespace simonk
