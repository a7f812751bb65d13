#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "simonk/interval_sets.hpp"
#include "simonk/simon_tree.hpp"
#include "simonk/word.hpp"

namespace simonk {

// Counters describing one refinement run; useful for tests and benchmarks.
struct RefineStats {
  std::int64_t queries_emitted = 0;
  std::int64_t pairs_processed = 0;
  std::int64_t pairs_skipped_dead = 0;
  std::int64_t one_sided_walks = 0;
  std::int64_t l_pairs_processed = 0;
  std::int64_t blocks_split = 0;
  std::int64_t structural_marks = 0;
  std::int32_t iterations = 0;
};

// A k-block of one word: explicit tree node when one exists, otherwise an
// implicit singleton [start:end] with node == kNoNode.
struct BlockRef {
  Pos start = 0;
  Pos end = 0;
  NodeId node = kNoNode;
};

// Joint refinement index over two words. After construction, level_s/level_t
// report for each suffix position the smallest k at which its k-block lost
// its partner on the other side (inf_level() when that never happens), and
// s_connected answers block-connection queries for arbitrary (i, j, k).
class ConnectionIndex {
 public:
  ConnectionIndex(const Word& s, const Word& t,
                  bool reverse_pair_order = false);

  Pos n_s() const { return s_.n; }
  Pos n_t() const { return t_.n; }
  Pos inf_level() const { return inf_; }
  bool words_equal() const { return equal_; }

  // Largest k with s ~k t. Requires words_equal() == false.
  Pos max_k() const;

  Pos level_s(Pos i) const { return s_.level_of[static_cast<size_t>(i)]; }
  Pos level_t(Pos j) const { return t_.level_of[static_cast<size_t>(j)]; }
  Symbol witness_s(Pos i) const {
    return s_.witness[static_cast<size_t>(i)];
  }
  Symbol witness_t(Pos j) const {
    return t_.witness[static_cast<size_t>(j)];
  }

  // True iff suffixes s[i:] and t[j:] are equivalent under ~k. Position
  // n_s()+1 (resp. n_t()+1) denotes the empty suffix.
  bool s_connected(Pos i, Pos j, Pos k) const;

  BlockRef block_s(Pos i, std::int32_t level) const;
  BlockRef block_t(Pos j, std::int32_t level) const;
  std::optional<Interval> partner_in_t(const BlockRef& a) const;
  std::optional<Interval> partner_in_s(const BlockRef& b) const;

  const SimonTree& tree_s() const { return s_.tree; }
  const SimonTree& tree_t() const { return t_.tree; }
  const Word& word_s() const { return *s_.word; }
  const Word& word_t() const { return *t_.word; }
  const RefineStats& stats() const { return stats_; }

 private:
  struct Side {
    explicit Side(const Word& w);

    Pos prev_of(Pos i) const { return prev[static_cast<size_t>(i) - 1]; }
    Symbol sym(Pos i) const { return word->at(i); }

    const Word* word;
    Pos n;
    std::vector<Pos> prev;
    SimonTree tree;
    LevelIndex levels;
    // Pairing state: per-node partner extent in the other word (0 when
    // unpaired) plus the per-position singleton pairing that survives all
    // deeper levels.
    std::vector<Pos> partner_lo, partner_hi;
    std::vector<Pos> u_pair;
    // Walk letters per node, CSR layout (filled only where needed).
    std::vector<std::int32_t> letters_off;
    std::vector<Symbol> letters;
    // Rolling map: explicit node starting at a position, valid for the
    // level recorded alongside.
    std::vector<NodeId> node_at_start;
    std::vector<std::int32_t> nas_level;
    IntervalSplitFind blocks;
    IntervalUnionFind runs;
    std::vector<Pos> level_of;
    std::vector<Symbol> witness;
  };

  void pair_trees();
  void pair_extents(NodeId snode, Pos spos, NodeId tnode, Pos tpos);
  void build_letter_lists(Side& sd, const std::vector<char>& need);
  void run_queries(bool reverse_pair_order);
  void refine(bool reverse_pair_order);
  void level1_step();
  void structural_pass(Side& sd, std::int32_t ell);
  void transition_to(Side& sd, std::int32_t ell);
  void mark_block(Side& sd, Pos p, Pos q, Pos ell, Symbol x);
  void walk(Side& lead, Side& follow, Pos e1, Pos e2, Pos f1, Pos f2,
            Pos ell, Symbol x);
  std::optional<Interval> live_partner_extent(const Side& sd, Pos p, Pos q,
                                              std::int32_t ell) const;
  std::optional<Interval> node_or_upair_extent(const Side& sd, NodeId v,
                                               Pos p) const;
  template <typename F>
  void for_each_pair(bool reverse_pair_order, F&& f) const;

  Side s_, t_;
  Pos inf_;
  bool equal_;
  RefineStats stats_;
  std::vector<Pos> ans_s_, ans_t_;
  size_t cur_s_ = 0, cur_t_ = 0;
  std::vector<std::pair<Pos, Pos>> l_now_, l_next_;
};

}  // namespace simonk
