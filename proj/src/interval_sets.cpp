#include "simonk/interval_sets.hpp"

#include <stdexcept>
#include <string>

namespace simonk {

namespace {

[[noreturn]] void throw_range(const char* what, Pos u, Pos n) {
  throw std::out_of_range(std::string(what) + ": position " +
                          std::to_string(u) + " outside [1:" +
                          std::to_string(n) + "]");
}

}  // namespace

IntervalSplitFind::IntervalSplitFind(Pos n) : n_(n) {
  if (n < 0) throw std::invalid_argument("IntervalSplitFind: negative size");
  rec_of_.assign(static_cast<size_t>(n), 0);
  lo_.reserve(16);
  hi_.reserve(16);
  lo_.push_back(1);
  hi_.push_back(n);
}

void IntervalSplitFind::check_range(Pos u) const {
  if (u < 1 || u > n_) throw_range("IntervalSplitFind", u, n_);
}

Interval IntervalSplitFind::find(Pos u) const {
  check_range(u);
  std::int32_t r = rec_of_[static_cast<size_t>(u) - 1];
  return {lo_[static_cast<size_t>(r)], hi_[static_cast<size_t>(r)]};
}

void IntervalSplitFind::split(Pos u) {
  check_range(u);
  std::int32_t r = rec_of_[static_cast<size_t>(u) - 1];
  Pos lo = lo_[static_cast<size_t>(r)];
  Pos hi = hi_[static_cast<size_t>(r)];
  if (u == hi) return;  // already a border
  std::int32_t fresh = static_cast<std::int32_t>(lo_.size());
  Pos left_len = u - lo + 1;
  Pos right_len = hi - u;
  if (left_len <= right_len) {
    // new record takes the left half [lo, u]
    lo_.push_back(lo);
    hi_.push_back(u);
    for (Pos v = lo; v <= u; ++v) rec_of_[static_cast<size_t>(v) - 1] = fresh;
    lo_[static_cast<size_t>(r)] = u + 1;
  } else {
    // new record takes the right half [u+1, hi]
    lo_.push_back(u + 1);
    hi_.push_back(hi);
    for (Pos v = u + 1; v <= hi; ++v)
      rec_of_[static_cast<size_t>(v) - 1] = fresh;
    hi_[static_cast<size_t>(r)] = u;
  }
}

IntervalUnionFind::IntervalUnionFind(Pos n) : n_(n) {
  if (n < 0) throw std::invalid_argument("IntervalUnionFind: negative size");
  parent_.resize(static_cast<size_t>(n));
  size_.assign(static_cast<size_t>(n), 1);
  lo_.resize(static_cast<size_t>(n));
  hi_.resize(static_cast<size_t>(n));
  for (Pos i = 1; i <= n; ++i) {
    parent_[static_cast<size_t>(i) - 1] = i - 1;
    lo_[static_cast<size_t>(i) - 1] = i;
    hi_[static_cast<size_t>(i) - 1] = i;
  }
}

void IntervalUnionFind::check_range(Pos u) const {
  if (u < 1 || u > n_) throw_range("IntervalUnionFind", u, n_);
}

std::int32_t IntervalUnionFind::root(std::int32_t v) {
  while (parent_[static_cast<size_t>(v)] != v) {
    parent_[static_cast<size_t>(v)] =
        parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
    v = parent_[static_cast<size_t>(v)];
  }
  return v;
}

Interval IntervalUnionFind::find(Pos u) {
  check_range(u);
  std::int32_t r = root(u - 1);
  return {lo_[static_cast<size_t>(r)], hi_[static_cast<size_t>(r)]};
}

void IntervalUnionFind::merge(Pos u) {
  check_range(u);
  std::int32_t left = root(u - 1);
  if (hi_[static_cast<size_t>(left)] != u || u >= n_)
    throw std::invalid_argument(
        "IntervalUnionFind::merge: position " + std::to_string(u) +
        " is not the right endpoint of a non-rightmost interval");
  std::int32_t right = root(u);  // element u+1 has index u
  Pos lo = lo_[static_cast<size_t>(left)];
  Pos hi = hi_[static_cast<size_t>(right)];
  std::int32_t big = left, small = right;
  if (size_[static_cast<size_t>(big)] < size_[static_cast<size_t>(small)])
    std::swap(big, small);
  parent_[static_cast<size_t>(small)] = big;
  size_[static_cast<size_t>(big)] += size_[static_cast<size_t>(small)];
  lo_[static_cast<size_t>(big)] = lo;
  hi_[static_cast<size_t>(big)] = hi;
}

}  // namespace simonk
