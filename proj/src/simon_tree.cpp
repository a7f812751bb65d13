#include "simonk/simon_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simonk {

SimonTree build_simon_tree(const Word& w) {
  Pos n = w.size();
  if (n == 0)
    throw std::invalid_argument("build_simon_tree: empty word has no tree");

  std::vector<Pos> next = next_occurrence_array(w);

  SimonTree t;
  t.n = n;
  size_t reserve = static_cast<size_t>(n) * 2 + 2;
  t.start.reserve(reserve);
  t.end.reserve(reserve);
  t.first_child.reserve(reserve);
  t.next_sibling.reserve(reserve);
  t.depth.reserve(reserve);
  t.duplicate.reserve(reserve);

  // Open nodes of the leftmost branch, root first; start 0 means "not yet
  // known". The root's open end is n + 1 (position of the virtual marker).
  std::vector<NodeId> open;
  open.push_back(t.add_node(0, n + 1, 0));

  for (Pos i = n; i >= 1; --i) {
    Pos xi = next[static_cast<size_t>(i) - 1];
    // Find the deepest open node to extend: ascend while the next occurrence
    // of w[i] escapes the current open block but not its parent, closing
    // passed nodes at i + 1.
    bool at_leaf = true;
    NodeId a = open.back();
    while (open.size() > 1) {
      NodeId cur = open.back();
      Pos r = t.end[static_cast<size_t>(cur)];
      Pos r_p = t.end[static_cast<size_t>(open[open.size() - 2])];
      if (xi >= r && xi < r_p) {
        a = cur;
        break;
      }
      t.start[static_cast<size_t>(cur)] = i + 1;
      open.pop_back();
      at_leaf = false;
      a = open.back();
    }
    // Split: if we are still at the leftmost leaf, record the closed block
    // [i+1, i+1] first (for i = n this is the virtual-marker block).
    if (at_leaf) {
      std::int32_t d = t.depth[static_cast<size_t>(a)] + 1;
      t.prepend_child(a, t.add_node(i + 1, i + 1, d));
    }
    NodeId fresh =
        t.add_node(0, i, t.depth[static_cast<size_t>(a)] + 1);
    t.prepend_child(a, fresh);
    open.push_back(fresh);
  }

  // Finalize: open nodes all start at 1.
  for (NodeId v : open) t.start[static_cast<size_t>(v)] = 1;

  // Drop the virtual-marker leaf [n+1, n+1], the root's rightmost child.
  {
    NodeId prev = kNoNode;
    NodeId c = t.first_child[0];
    while (t.next_sibling[static_cast<size_t>(c)] != kNoNode) {
      prev = c;
      c = t.next_sibling[static_cast<size_t>(c)];
    }
    if (prev == kNoNode)
      t.first_child[0] = kNoNode;
    else
      t.next_sibling[static_cast<size_t>(prev)] = kNoNode;
  }

  // Clamp the rightmost branch's ends to n.
  for (NodeId v = t.root(); v != kNoNode;) {
    if (t.end[static_cast<size_t>(v)] > n) t.end[static_cast<size_t>(v)] = n;
    NodeId last = t.first_child[static_cast<size_t>(v)];
    while (last != kNoNode &&
           t.next_sibling[static_cast<size_t>(last)] != kNoNode)
      last = t.next_sibling[static_cast<size_t>(last)];
    v = last;
  }

  // A singleton root is a leaf; the construction's lone open child under it
  // duplicates the root block and is removed.
  if (t.start[0] == t.end[0]) t.first_child[0] = kNoNode;

  return t;
}

void transform_tree(SimonTree& tree) {
  NodeId count = tree.node_count();
  for (NodeId v = 0; v < count; ++v) {
    if (tree.is_singleton(v) && tree.is_leaf(v)) {
      NodeId dup =
          tree.add_node(tree.start[static_cast<size_t>(v)],
                        tree.end[static_cast<size_t>(v)],
                        tree.depth[static_cast<size_t>(v)] + 1, true);
      tree.prepend_child(v, dup);
    }
  }
}

std::vector<Interval> k_blocks(const SimonTree& tree, std::int32_t k) {
  if (k < 0) throw std::invalid_argument("k_blocks: negative level");
  std::vector<Interval> out;
  // Depth-first, children left-to-right; stop at depth k or at a node whose
  // block no longer refines (singleton leaf or duplicate chain).
  std::vector<NodeId> stack;
  stack.push_back(tree.root());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    std::int32_t d = tree.depth[static_cast<size_t>(v)];
    if (d == k || tree.is_leaf(v) || tree.is_singleton(v)) {
      out.emplace_back(tree.start[static_cast<size_t>(v)],
                       tree.end[static_cast<size_t>(v)]);
      continue;
    }
    // Push children right-to-left so the leftmost pops first.
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string export_dot(const SimonTree& tree, const Word& w,
                       const AlphabetMap& alphabet) {
  std::ostringstream out;
  out << "digraph simon_tree {\n";
  out << "  node [shape=box];\n";
  // Emit via traversal so unlinked arena leftovers are skipped.
  std::vector<NodeId> stack;
  std::vector<NodeId> order;
  stack.push_back(tree.root());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (NodeId v : order) {
    Pos s = tree.start[static_cast<size_t>(v)];
    Pos e = tree.end[static_cast<size_t>(v)];
    out << "  n" << v << " [label=\"[" << s << ":" << e << "] ";
    for (Pos i = s; i <= e; ++i) out << alphabet.token(w.at(i));
    out << "\"];\n";
  }
  for (NodeId v : order) {
    for (NodeId c : tree.children(v)) out << "  n" << v << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

LevelIndex build_level_index(const SimonTree& tree) {
  LevelIndex idx;
  std::int32_t maxd = 0;
  // Reachable nodes only (arena may hold unlinked construction leftovers).
  std::vector<NodeId> bfs;
  bfs.push_back(tree.root());
  for (size_t head = 0; head < bfs.size(); ++head) {
    NodeId v = bfs[head];
    maxd = std::max(maxd, tree.depth[static_cast<size_t>(v)]);
    for (NodeId c = tree.first_child[static_cast<size_t>(v)]; c != kNoNode;
         c = tree.next_sibling[static_cast<size_t>(c)])
      bfs.push_back(c);
  }
  idx.max_depth = maxd;
  idx.offsets.assign(static_cast<size_t>(maxd) + 2, 0);
  for (NodeId v : bfs)
    ++idx.offsets[static_cast<size_t>(tree.depth[static_cast<size_t>(v)]) + 1];
  for (size_t d = 1; d < idx.offsets.size(); ++d)
    idx.offsets[d] += idx.offsets[d - 1];
  idx.nodes.resize(bfs.size());
  std::vector<std::int32_t> cursor(idx.offsets.begin(), idx.offsets.end() - 1);
  // BFS visits parents left-to-right and children left-to-right, so each
  // level fills sorted by start.
  for (NodeId v : bfs) {
    std::int32_t d = tree.depth[static_cast<size_t>(v)];
    idx.nodes[static_cast<size_t>(cursor[static_cast<size_t>(d)]++)] = v;
  }
  return idx;
}

}  // namespace simonk
