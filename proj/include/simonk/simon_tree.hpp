#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simonk/interval_sets.hpp"
#include "simonk/word.hpp"

namespace simonk {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// Tree of block intervals: the root is [1:n]; the children of a node are the
// sub-blocks refining it one level deeper, stored leftmost-first (first_child
// is the leftmost child; next_sibling points rightward). Every position ends
// in a singleton leaf at some depth; singletons deeper than their leaf stay
// implicit. Nodes live in a flat arena; node 0 is the root.
class SimonTree {
 public:
  Pos n = 0;
  std::vector<Pos> start;
  std::vector<Pos> end;
  std::vector<NodeId> first_child;
  std::vector<NodeId> next_sibling;
  std::vector<std::int32_t> depth;
  std::vector<std::uint8_t> duplicate;  // 1 for nodes added by transform()

  NodeId root() const { return 0; }
  NodeId node_count() const { return static_cast<NodeId>(start.size()); }
  bool is_singleton(NodeId v) const {
    return start[static_cast<size_t>(v)] == end[static_cast<size_t>(v)];
  }
  bool is_leaf(NodeId v) const {
    return first_child[static_cast<size_t>(v)] == kNoNode;
  }

  NodeId add_node(Pos s, Pos e, std::int32_t d, bool dup = false) {
    start.push_back(s);
    end.push_back(e);
    first_child.push_back(kNoNode);
    next_sibling.push_back(kNoNode);
    depth.push_back(d);
    duplicate.push_back(dup ? 1 : 0);
    return node_count() - 1;
  }

  // Prepends c as the new leftmost child of v.
  void prepend_child(NodeId v, NodeId c) {
    next_sibling[static_cast<size_t>(c)] = first_child[static_cast<size_t>(v)];
    first_child[static_cast<size_t>(v)] = c;
  }

  // Children of v left-to-right.
  std::vector<NodeId> children(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId c = first_child[static_cast<size_t>(v)]; c != kNoNode;
         c = next_sibling[static_cast<size_t>(c)])
      out.push_back(c);
    return out;
  }
};

// Builds the block tree of w in one right-to-left pass using the
// next-occurrence array. Throws std::invalid_argument for the empty word.
SimonTree build_simon_tree(const Word& w);

// Adds to every singleton leaf a same-interval child one level deeper, so
// each singleton block is explicit on exactly two consecutive levels.
void transform_tree(SimonTree& tree);

// The partition of [1:n] into level-k blocks, left to right, including
// singletons that the tree keeps implicit. k = 0 yields [[1:n]].
std::vector<Interval> k_blocks(const SimonTree& tree, std::int32_t k);

// Graphviz text; node labels are "[m:n] <tokens of w[m:n]>".
std::string export_dot(const SimonTree& tree, const Word& w,
                       const AlphabetMap& alphabet);

// Nodes grouped by depth (CSR); within a level, nodes are ordered by start.
struct LevelIndex {
  std::vector<std::int32_t> offsets;  // size max_depth + 2
  std::vector<NodeId> nodes;
  std::int32_t max_depth = 0;

  std::int32_t level_size(std::int32_t d) const {
    if (d < 0 || d > max_depth) return 0;
    return offsets[static_cast<size_t>(d) + 1] - offsets[static_cast<size_t>(d)];
  }
  const NodeId* level_begin(std::int32_t d) const {
    return nodes.data() + offsets[static_cast<size_t>(d)];
  }
};

LevelIndex build_level_index(const SimonTree& tree);

}  // namespace simonk
