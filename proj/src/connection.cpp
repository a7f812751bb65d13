#include "simonk/connection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace simonk {
namespace {

// last occurrence of x at position <= m-2, if derivable from local data.
std::optional<Pos> derivable_prevpos(const Word& w,
                                     const std::vector<Pos>& prev, Pos m,
                                     Pos n, Symbol x) {
  auto prev_of = [&](Pos i) { return prev[static_cast<size_t>(i) - 1]; };
  if (m <= 2) return 0;
  if (w.at(m - 1) == x) return prev_of(m - 1);
  if (m == n && w.at(m) == x) {
    Pos p = prev_of(m);
    return p == m - 1 ? prev_of(p) : p;
  }
  return std::nullopt;
}

// last occurrence of x at position <= n-1, if derivable. ps must already be
// resolved (last occurrence <= m-2).
std::optional<Pos> derivable_rightpos(const Word& w,
                                      const std::vector<Pos>& prev, Pos m,
                                      Pos n, Symbol x, Pos ps) {
  auto prev_of = [&](Pos i) { return prev[static_cast<size_t>(i) - 1]; };
  if (w.at(n) == x) return prev_of(n);
  if (n >= 2 && w.at(n - 1) == x) return n - 1;
  if (m == n) return ps;  // no x at m-1 or m, so nothing new in [m-1, n-1]
  return std::nullopt;
}

struct PairVals {
  Pos ps = 0, rp3a = 0, rp2a = 0;  // lead block
  Pos pt = 0, rp3b = 0, rp2b = 0;  // follow block (when paired)
};

// Resolves the occurrence bounds a pair-letter walk needs. `qf(side, pi, x)`
// must answer "last x at position <= pi-1". The query-emission passes and
// the consuming pass all route through here, which keeps the order of
// non-derivable lookups identical across passes.
template <typename QF>
PairVals resolve_vals(const Word& wa, const std::vector<Pos>& pa, Pos ma,
                      Pos na, const Word* wb, const std::vector<Pos>* pb,
                      Pos mb, Pos nb, Symbol x, int lead_id, QF&& qf) {
  PairVals v;
  auto ps = derivable_prevpos(wa, pa, ma, na, x);
  v.ps = ps ? *ps : qf(lead_id, ma - 1, x);
  auto r3 = derivable_rightpos(wa, pa, ma, na, x, v.ps);
  v.rp3a = r3 ? *r3 : qf(lead_id, na, x);
  v.rp2a = wa.at(na) == x ? na : v.rp3a;
  if (wb != nullptr) {
    auto pt = derivable_prevpos(*wb, *pb, mb, nb, x);
    v.pt = pt ? *pt : qf(1 - lead_id, mb - 1, x);
    auto s3 = derivable_rightpos(*wb, *pb, mb, nb, x, v.pt);
    v.rp3b = s3 ? *s3 : qf(1 - lead_id, nb, x);
    v.rp2b = wb->at(nb) == x ? nb : v.rp3b;
  }
  return v;
}

}  // namespace

ConnectionIndex::Side::Side(const Word& w)
    : word(&w),
      n(w.size()),
      prev(prev_occurrence_array(w)),
      tree(build_simon_tree(w)),
      blocks(w.size()),
      runs(w.size()) {
  transform_tree(tree);
  levels = build_level_index(tree);
  const size_t nodes = static_cast<size_t>(tree.node_count());
  partner_lo.assign(nodes, 0);
  partner_hi.assign(nodes, 0);
  const size_t slots = static_cast<size_t>(n) + 1;
  u_pair.assign(slots, 0);
  node_at_start.assign(slots, kNoNode);
  nas_level.assign(slots, -1);
  witness.assign(slots, 0);
}

ConnectionIndex::ConnectionIndex(const Word& s, const Word& t,
                                 bool reverse_pair_order)
    : s_(s), t_(t), inf_(s.size() + t.size() + 1), equal_(s == t) {
  if (s.empty() || t.empty()) {
    throw std::invalid_argument("ConnectionIndex requires non-empty words");
  }
  s_.level_of.assign(static_cast<size_t>(s_.n) + 1, inf_);
  t_.level_of.assign(static_cast<size_t>(t_.n) + 1, inf_);
  pair_trees();
  {
    std::vector<char> need_s(static_cast<size_t>(s_.tree.node_count()), 1);
    build_letter_lists(s_, need_s);
    std::vector<char> need_t(static_cast<size_t>(t_.tree.node_count()), 0);
    for (NodeId v = 0; v < t_.tree.node_count(); ++v) {
      if (t_.tree.depth[static_cast<size_t>(v)] == 1) {
        need_t[static_cast<size_t>(v)] = 1;
      }
    }
    build_letter_lists(t_, need_t);
  }
  run_queries(reverse_pair_order);
  refine(reverse_pair_order);
  assert(cur_s_ == ans_s_.size());
  assert(cur_t_ == ans_t_.size());
  // Only pairing, levels and witnesses serve queries; drop the scaffolding.
  ans_s_.clear();
  ans_s_.shrink_to_fit();
  ans_t_.clear();
  ans_t_.shrink_to_fit();
  for (Side* sd : {&s_, &t_}) {
    sd->letters_off.clear();
    sd->letters_off.shrink_to_fit();
    sd->letters.clear();
    sd->letters.shrink_to_fit();
    sd->node_at_start.clear();
    sd->node_at_start.shrink_to_fit();
    sd->nas_level.clear();
    sd->nas_level.shrink_to_fit();
    sd->blocks = IntervalSplitFind(1);
    sd->runs = IntervalUnionFind(1);
  }
}

void ConnectionIndex::pair_extents(NodeId snode, Pos spos, NodeId tnode,
                                   Pos tpos) {
  struct Frame {
    NodeId us, ut;
    Pos ps, pt;
  };
  std::vector<Frame> stack;
  stack.push_back({snode, tnode, spos, tpos});
  std::vector<NodeId> cs, ct;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Pos slo =
        f.us != kNoNode ? s_.tree.start[static_cast<size_t>(f.us)] : f.ps;
    const Pos shi =
        f.us != kNoNode ? s_.tree.end[static_cast<size_t>(f.us)] : f.ps;
    const Pos tlo =
        f.ut != kNoNode ? t_.tree.start[static_cast<size_t>(f.ut)] : f.pt;
    const Pos thi =
        f.ut != kNoNode ? t_.tree.end[static_cast<size_t>(f.ut)] : f.pt;
    if (f.us != kNoNode) {
      s_.partner_lo[static_cast<size_t>(f.us)] = tlo;
      s_.partner_hi[static_cast<size_t>(f.us)] = thi;
    }
    if (f.ut != kNoNode) {
      t_.partner_lo[static_cast<size_t>(f.ut)] = slo;
      t_.partner_hi[static_cast<size_t>(f.ut)] = shi;
    }
    if (slo == shi && tlo == thi) {
      // Singleton against singleton: every deeper level keeps this pairing.
      s_.u_pair[static_cast<size_t>(slo)] = tlo;
      t_.u_pair[static_cast<size_t>(tlo)] = slo;
      continue;
    }
    // Effective child list: real children, or a singleton carried one level
    // down (as its duplicate node when present, implicitly otherwise).
    cs.clear();
    ct.clear();
    if (slo != shi) {
      for (NodeId c = s_.tree.first_child[static_cast<size_t>(f.us)];
           c != kNoNode; c = s_.tree.next_sibling[static_cast<size_t>(c)]) {
        cs.push_back(c);
      }
    } else {
      cs.push_back(f.us != kNoNode
                       ? s_.tree.first_child[static_cast<size_t>(f.us)]
                       : kNoNode);
    }
    if (tlo != thi) {
      for (NodeId c = t_.tree.first_child[static_cast<size_t>(f.ut)];
           c != kNoNode; c = t_.tree.next_sibling[static_cast<size_t>(c)]) {
        ct.push_back(c);
      }
    } else {
      ct.push_back(f.ut != kNoNode
                       ? t_.tree.first_child[static_cast<size_t>(f.ut)]
                       : kNoNode);
    }
    const size_t zip = std::min(cs.size(), ct.size());
    for (size_t r = 0; r < zip; ++r) {
      stack.push_back(
          {cs[cs.size() - 1 - r], ct[ct.size() - 1 - r], slo, tlo});
    }
  }
}

void ConnectionIndex::pair_trees() {
  pair_extents(s_.tree.root(), 1, t_.tree.root(), 1);
}

void ConnectionIndex::build_letter_lists(Side& sd,
                                         const std::vector<char>& need) {
  const Pos n = sd.n;
  const size_t nodes = static_cast<size_t>(sd.tree.node_count());
  sd.letters_off.assign(nodes + 1, 0);
  const std::vector<Pos> nxt_occ = next_occurrence_array(*sd.word);
  const Pos none = next_none(n);
  // Nodes bucketed by the position their letter scan starts from.
  std::vector<std::int32_t> bucket_off(static_cast<size_t>(n) + 2, 0);
  std::vector<NodeId> bucket_nodes;
  auto scan_from = [&](NodeId v) {
    return std::max<Pos>(sd.tree.start[static_cast<size_t>(v)] - 1, 1);
  };
  std::int32_t needed = 0;
  for (NodeId v = 0; v < sd.tree.node_count(); ++v) {
    if (need[static_cast<size_t>(v)]) {
      ++bucket_off[static_cast<size_t>(scan_from(v)) + 1];
      ++needed;
    }
  }
  for (size_t i = 1; i < bucket_off.size(); ++i) {
    bucket_off[i] += bucket_off[i - 1];
  }
  bucket_nodes.assign(static_cast<size_t>(needed), kNoNode);
  {
    std::vector<std::int32_t> head(bucket_off.begin(), bucket_off.end() - 1);
    for (NodeId v = 0; v < sd.tree.node_count(); ++v) {
      if (need[static_cast<size_t>(v)]) {
        bucket_nodes[static_cast<size_t>(
            head[static_cast<size_t>(scan_from(v))]++)] = v;
      }
    }
  }
  // Ascending linked list of the positions q >= u whose letter does not
  // occur earlier in [u, q-1], maintained while u sweeps right to left.
  // A node whose scan starts at u reads its distinct letters off the list
  // head; the block's final letter is appended when the scan missed it.
  std::vector<Pos> lnext(static_cast<size_t>(n) + 1, 0);
  std::vector<Pos> lprev(static_cast<size_t>(n) + 1, 0);
  auto sweep = [&](auto&& per_node) {
    std::fill(lnext.begin(), lnext.end(), 0);
    std::fill(lprev.begin(), lprev.end(), 0);
    Pos head = 0;
    for (Pos u = n; u >= 1; --u) {
      const Pos sup = nxt_occ[static_cast<size_t>(u) - 1];
      if (sup != none) {
        // u supersedes the previous first occurrence of its letter.
        const Pos b = lprev[static_cast<size_t>(sup)];
        const Pos a = lnext[static_cast<size_t>(sup)];
        if (b != 0) {
          lnext[static_cast<size_t>(b)] = a;
        } else {
          head = a;
        }
        if (a != 0) lprev[static_cast<size_t>(a)] = b;
      }
      lnext[static_cast<size_t>(u)] = head;
      lprev[static_cast<size_t>(u)] = 0;
      if (head != 0) lprev[static_cast<size_t>(head)] = u;
      head = u;
      for (std::int32_t bi = bucket_off[static_cast<size_t>(u)];
           bi < bucket_off[static_cast<size_t>(u) + 1]; ++bi) {
        per_node(bucket_nodes[static_cast<size_t>(bi)], u);
      }
    }
  };
  sweep([&](NodeId v, Pos u) {
    const Pos hi = sd.tree.end[static_cast<size_t>(v)] - 1;
    const Symbol endsym = sd.sym(sd.tree.end[static_cast<size_t>(v)]);
    std::int32_t cnt = 0;
    bool saw_end = false;
    for (Pos q = u; q != 0 && q <= hi; q = lnext[static_cast<size_t>(q)]) {
      ++cnt;
      if (sd.sym(q) == endsym) saw_end = true;
    }
    if (!saw_end) ++cnt;
    sd.letters_off[static_cast<size_t>(v) + 1] = cnt;
  });
  for (size_t i = 1; i < sd.letters_off.size(); ++i) {
    sd.letters_off[i] += sd.letters_off[i - 1];
  }
  sd.letters.assign(static_cast<size_t>(sd.letters_off.back()), 0);
  sweep([&](NodeId v, Pos u) {
    const Pos hi = sd.tree.end[static_cast<size_t>(v)] - 1;
    const Symbol endsym = sd.sym(sd.tree.end[static_cast<size_t>(v)]);
    std::int32_t at = sd.letters_off[static_cast<size_t>(v)];
    bool saw_end = false;
    for (Pos q = u; q != 0 && q <= hi; q = lnext[static_cast<size_t>(q)]) {
      sd.letters[static_cast<size_t>(at++)] = sd.sym(q);
      if (sd.sym(q) == endsym) saw_end = true;
    }
    if (!saw_end) sd.letters[static_cast<size_t>(at++)] = endsym;
    assert(at == sd.letters_off[static_cast<size_t>(v) + 1]);
    (void)at;
  });
}

std::optional<Interval> ConnectionIndex::node_or_upair_extent(
    const Side& sd, NodeId v, Pos p) const {
  if (v != kNoNode) {
    if (sd.partner_lo[static_cast<size_t>(v)] != 0) {
      return Interval{sd.partner_lo[static_cast<size_t>(v)],
                      sd.partner_hi[static_cast<size_t>(v)]};
    }
    if (sd.tree.start[static_cast<size_t>(v)] !=
        sd.tree.end[static_cast<size_t>(v)]) {
      return std::nullopt;
    }
  }
  const Pos u = sd.u_pair[static_cast<size_t>(p)];
  if (u != 0) return Interval{u, u};
  return std::nullopt;
}

std::optional<Interval> ConnectionIndex::live_partner_extent(
    const Side& sd, Pos p, Pos q, std::int32_t ell) const {
  const NodeId nid = sd.node_at_start[static_cast<size_t>(p)];
  if (nid != kNoNode && sd.nas_level[static_cast<size_t>(p)] == ell) {
    assert(sd.tree.end[static_cast<size_t>(nid)] == q);
    return node_or_upair_extent(sd, nid, p);
  }
  assert(p == q);
  (void)q;
  return node_or_upair_extent(sd, kNoNode, p);
}

template <typename F>
void ConnectionIndex::for_each_pair(bool reverse_pair_order, F&& f) const {
  auto level_slice = [&](const Side& sd, std::int32_t d, auto&& g) {
    const NodeId* base = sd.levels.level_begin(d);
    const std::int32_t cnt = sd.levels.level_size(d);
    if (!reverse_pair_order) {
      for (std::int32_t i = 0; i < cnt; ++i) g(base[i]);
    } else {
      for (std::int32_t i = cnt - 1; i >= 0; --i) g(base[i]);
    }
  };
  const std::int32_t maxd = s_.levels.max_depth;
  for (std::int32_t k = 1; k <= maxd; ++k) {
    level_slice(s_, k, [&](NodeId v) { f(0, k, v); });
    if (k == 1 && t_.levels.max_depth >= 1) {
      level_slice(t_, 1, [&](NodeId v) { f(1, 1, v); });
    }
  }
}

void ConnectionIndex::run_queries(bool reverse_pair_order) {
  std::vector<std::int32_t> cnt_s(static_cast<size_t>(s_.n) + 2, 0);
  std::vector<std::int32_t> cnt_t(static_cast<size_t>(t_.n) + 2, 0);
  std::int64_t tot_s = 0, tot_t = 0;

  auto pass = [&](auto&& qf) {
    for_each_pair(
        reverse_pair_order, [&](int lead_id, std::int32_t k, NodeId a) {
          (void)k;
          const Side& lead = lead_id == 0 ? s_ : t_;
          const Side& follow = lead_id == 0 ? t_ : s_;
          const Pos ma = lead.tree.start[static_cast<size_t>(a)];
          const Pos na = lead.tree.end[static_cast<size_t>(a)];
          const auto ext = node_or_upair_extent(lead, a, ma);
          for (std::int32_t li = lead.letters_off[static_cast<size_t>(a)];
               li < lead.letters_off[static_cast<size_t>(a) + 1]; ++li) {
            const Symbol x = lead.letters[static_cast<size_t>(li)];
            resolve_vals(*lead.word, lead.prev, ma, na,
                         ext ? follow.word : nullptr,
                         ext ? &follow.prev : nullptr, ext ? ext->first : 0,
                         ext ? ext->second : 0, x, lead_id, qf);
          }
        });
  };

  pass([&](int side, Pos pi, Symbol x) -> Pos {
    (void)x;
    if (side == 0) {
      ++cnt_s[static_cast<size_t>(pi)];
      ++tot_s;
    } else {
      ++cnt_t[static_cast<size_t>(pi)];
      ++tot_t;
    }
    return 0;
  });
  stats_.queries_emitted = tot_s + tot_t;

  struct Batch {
    std::vector<std::int32_t> off;
    std::vector<Symbol> sym;
    std::vector<std::int32_t> idx;
  };
  auto build = [](const std::vector<std::int32_t>& cnt, std::int64_t tot) {
    Batch b;
    b.off.assign(cnt.size() + 1, 0);
    for (size_t i = 0; i < cnt.size(); ++i) b.off[i + 1] = b.off[i] + cnt[i];
    b.sym.assign(static_cast<size_t>(tot), 0);
    b.idx.assign(static_cast<size_t>(tot), 0);
    return b;
  };
  Batch bs = build(cnt_s, tot_s);
  Batch bt = build(cnt_t, tot_t);
  cnt_s.clear();
  cnt_s.shrink_to_fit();
  cnt_t.clear();
  cnt_t.shrink_to_fit();

  {
    std::vector<std::int32_t> head_s(bs.off.begin(), bs.off.end() - 1);
    std::vector<std::int32_t> head_t(bt.off.begin(), bt.off.end() - 1);
    std::int32_t emit_s = 0, emit_t = 0;
    pass([&](int side, Pos pi, Symbol x) -> Pos {
      Batch& b = side == 0 ? bs : bt;
      std::vector<std::int32_t>& head = side == 0 ? head_s : head_t;
      std::int32_t& emit = side == 0 ? emit_s : emit_t;
      const std::int32_t slot = head[static_cast<size_t>(pi)]++;
      b.sym[static_cast<size_t>(slot)] = x;
      b.idx[static_cast<size_t>(slot)] = emit++;
      return 0;
    });
  }

  // One left-to-right sweep answers every "last x before position pi".
  auto answer = [](const Side& sd, const Batch& b, std::vector<Pos>& out) {
    out.assign(b.sym.size(), 0);
    std::vector<Pos> last(static_cast<size_t>(sd.word->sigma()) + 1, 0);
    for (Pos j = 1; j <= sd.n; ++j) {
      for (std::int32_t i = b.off[static_cast<size_t>(j)];
           i < b.off[static_cast<size_t>(j) + 1]; ++i) {
        out[static_cast<size_t>(b.idx[static_cast<size_t>(i)])] =
            last[static_cast<size_t>(b.sym[static_cast<size_t>(i)])];
      }
      last[static_cast<size_t>(sd.sym(j))] = j;
    }
  };
  answer(s_, bs, ans_s_);
  answer(t_, bt, ans_t_);
}

void ConnectionIndex::mark_block(Side& sd, Pos p, Pos q, Pos ell, Symbol x) {
  for (Pos v = p; v <= q; ++v) {
    sd.level_of[static_cast<size_t>(v)] = ell;
    sd.witness[static_cast<size_t>(v)] = x;
  }
  for (Pos v = p; v < q; ++v) sd.runs.merge(v);
  if (p >= 2 && sd.level_of[static_cast<size_t>(p) - 1] != inf_) {
    sd.runs.merge(p - 1);
  }
  if (q < sd.n && sd.level_of[static_cast<size_t>(q) + 1] != inf_) {
    sd.runs.merge(q);
  }
  ++stats_.blocks_split;
}

void ConnectionIndex::walk(Side& lead, Side& follow, Pos e1, Pos e2, Pos f1,
                           Pos f2, Pos ell, Symbol x) {
  if (e1 < 1) e1 = 1;
  if (f1 < 1) f1 = 1;
  if (e1 > e2 || f2 < f1) return;
  auto advance_alive = [this](Side& sd, Pos pos) -> Pos {
    while (pos <= sd.n && sd.level_of[static_cast<size_t>(pos)] != inf_) {
      pos = sd.runs.find(pos).second + 1;
    }
    return pos <= sd.n ? pos : 0;
  };
  Pos p = advance_alive(lead, e1);
  if (p == 0) return;
  {
    // Sync onto the first live follow block at or past f1 and jump to its
    // partner; lead blocks before that partner pair up below f1 or is dead.
    const Pos fb = advance_alive(follow, f1);
    if (fb == 0) return;
    const Interval fblk = follow.blocks.find(fb);
    const auto back =
        live_partner_extent(follow, fblk.first, fblk.second, ell);
    assert(back.has_value());
    if (back && back->first > p) p = back->first;
  }
  while (true) {
    p = advance_alive(lead, p);
    if (p == 0) return;
    const Interval blk = lead.blocks.find(p);
    const Pos bp = blk.first, bq = blk.second;
    if (bq > e2) return;
    const auto pe = live_partner_extent(lead, bp, bq, ell);
    assert(pe.has_value());
    const Pos pp = pe->first, qq = pe->second;
    if (qq > f2) return;
    assert(qq >= f1);
    mark_block(lead, bp, bq, ell, x);
    mark_block(follow, pp, qq, ell, x);
    if (bp == bq && pp == qq) {
      const bool lead_is_s = &lead == &s_;
      const Pos spos = lead_is_s ? bp : pp;
      const Pos tpos = lead_is_s ? pp : bp;
      const bool explicit_s =
          s_.node_at_start[static_cast<size_t>(spos)] != kNoNode &&
          s_.nas_level[static_cast<size_t>(spos)] ==
              static_cast<std::int32_t>(ell);
      if (!explicit_s) l_next_.emplace_back(spos, tpos);
    }
    p = bq + 1;
    if (p > lead.n) return;
  }
}

void ConnectionIndex::level1_step() {
  const std::int32_t gs = s_.levels.level_size(1);
  const std::int32_t gt = t_.levels.level_size(1);
  const NodeId* ns = s_.levels.level_begin(1);
  const NodeId* nt = t_.levels.level_begin(1);
  // Per letter: 0 unseen, 1 s only, 2 both, 3 t only; check counts letters
  // currently on one side only. End letters are distinct within one side.
  const Symbol sig = std::max(s_.word->sigma(), t_.word->sigma());
  std::vector<std::uint8_t> state(static_cast<size_t>(sig) + 1, 0);
  std::int32_t check = 0;
  auto add = [&](Symbol x, bool from_s) {
    std::uint8_t& st = state[static_cast<size_t>(x)];
    if (from_s) {
      if (st == 0) {
        st = 1;
        ++check;
      } else {
        assert(st == 3);
        st = 2;
        --check;
      }
    } else {
      if (st == 0) {
        st = 3;
        ++check;
      } else {
        assert(st == 1);
        st = 2;
        --check;
      }
    }
  };
  const std::int32_t top = std::max(gs, gt);
  for (std::int32_t r = 0; r < top; ++r) {
    const NodeId sa = r < gs ? ns[gs - 1 - r] : kNoNode;
    const NodeId tb = r < gt ? nt[gt - 1 - r] : kNoNode;
    if (sa != kNoNode && tb != kNoNode) {
      add(s_.sym(s_.tree.end[static_cast<size_t>(sa)]), true);
      add(t_.sym(t_.tree.end[static_cast<size_t>(tb)]), false);
      if (check != 0) {
        mark_block(s_, s_.tree.start[static_cast<size_t>(sa)],
                   s_.tree.end[static_cast<size_t>(sa)], 1, 0);
        mark_block(t_, t_.tree.start[static_cast<size_t>(tb)],
                   t_.tree.end[static_cast<size_t>(tb)], 1, 0);
      }
    } else if (sa != kNoNode) {
      mark_block(s_, s_.tree.start[static_cast<size_t>(sa)],
                 s_.tree.end[static_cast<size_t>(sa)], 1, 0);
      ++stats_.structural_marks;
    } else if (tb != kNoNode) {
      mark_block(t_, t_.tree.start[static_cast<size_t>(tb)],
                 t_.tree.end[static_cast<size_t>(tb)], 1, 0);
      ++stats_.structural_marks;
    }
  }
}

void ConnectionIndex::structural_pass(Side& sd, std::int32_t ell) {
  if (ell > sd.levels.max_depth) return;
  const NodeId* base = sd.levels.level_begin(ell);
  for (std::int32_t i = 0; i < sd.levels.level_size(ell); ++i) {
    const NodeId v = base[i];
    const Pos p = sd.tree.start[static_cast<size_t>(v)];
    if (sd.level_of[static_cast<size_t>(p)] != inf_) continue;
    if (node_or_upair_extent(sd, v, p)) continue;
    mark_block(sd, p, sd.tree.end[static_cast<size_t>(v)], ell, 0);
    ++stats_.structural_marks;
  }
}

void ConnectionIndex::transition_to(Side& sd, std::int32_t ell) {
  if (ell - 1 <= sd.levels.max_depth) {
    const NodeId* base = sd.levels.level_begin(ell - 1);
    for (std::int32_t i = 0; i < sd.levels.level_size(ell - 1); ++i) {
      const NodeId v = base[i];
      const Pos vend = sd.tree.end[static_cast<size_t>(v)];
      for (NodeId c = sd.tree.first_child[static_cast<size_t>(v)];
           c != kNoNode; c = sd.tree.next_sibling[static_cast<size_t>(c)]) {
        const Pos cend = sd.tree.end[static_cast<size_t>(c)];
        if (cend != vend) sd.blocks.split(cend);
      }
    }
  }
  if (ell <= sd.levels.max_depth) {
    const NodeId* base = sd.levels.level_begin(ell);
    for (std::int32_t i = 0; i < sd.levels.level_size(ell); ++i) {
      const NodeId v = base[i];
      const Pos st = sd.tree.start[static_cast<size_t>(v)];
      sd.node_at_start[static_cast<size_t>(st)] = v;
      sd.nas_level[static_cast<size_t>(st)] = ell;
    }
  }
}

void ConnectionIndex::refine(bool reverse_pair_order) {
  transition_to(s_, 1);
  transition_to(t_, 1);
  level1_step();
  transition_to(s_, 2);
  transition_to(t_, 2);

  auto consume = [this](int side, Pos pi, Symbol x) -> Pos {
    (void)pi;
    (void)x;
    return side == 0 ? ans_s_[cur_s_++] : ans_t_[cur_t_++];
  };

  auto process_level = [&](Side& lead, Side& follow, int lead_id,
                           std::int32_t k, Pos ell) {
    if (k > lead.levels.max_depth) return;
    const NodeId* base = lead.levels.level_begin(k);
    const std::int32_t cnt = lead.levels.level_size(k);
    for (std::int32_t ii = 0; ii < cnt; ++ii) {
      const NodeId a = reverse_pair_order ? base[cnt - 1 - ii] : base[ii];
      const Pos ma = lead.tree.start[static_cast<size_t>(a)];
      const Pos na = lead.tree.end[static_cast<size_t>(a)];
      const auto ext = node_or_upair_extent(lead, a, ma);
      const Pos lv = lead.level_of[static_cast<size_t>(ma)];
      const bool dead_early = lv < k;
      const bool fresh = lv == k;
      if (dead_early) {
        ++stats_.pairs_skipped_dead;
      } else {
        ++stats_.pairs_processed;
      }
      for (std::int32_t li = lead.letters_off[static_cast<size_t>(a)];
           li < lead.letters_off[static_cast<size_t>(a) + 1]; ++li) {
        const Symbol x = lead.letters[static_cast<size_t>(li)];
        const PairVals v = resolve_vals(
            *lead.word, lead.prev, ma, na, ext ? follow.word : nullptr,
            ext ? &follow.prev : nullptr, ext ? ext->first : 0,
            ext ? ext->second : 0, x, lead_id, consume);
        if (dead_early) continue;
        if (ext) {
          const Pos nb = ext->second;
          walk(lead, follow, v.ps + 1, ma - 1, 1, v.pt, ell, x);
          walk(lead, follow, v.ps + 1, v.rp2a, v.rp2b + 1, nb, ell, x);
          if (v.rp2b > v.rp3b) {
            walk(lead, follow, v.ps + 1, v.rp3a, v.rp3b + 1, v.rp2b, ell, x);
          }
          if (fresh) {
            walk(lead, follow, v.ps + 1, v.rp3a, v.pt + 1, v.rp3b, ell, x);
          }
        } else if (fresh) {
          // Unpaired block: live pairs landing into it split outright.
          walk(lead, follow, v.ps + 1, v.rp3a, 1, follow.n, ell, x);
          ++stats_.one_sided_walks;
        }
      }
    }
  };

  const std::int32_t maxd =
      std::max(s_.levels.max_depth, t_.levels.max_depth);
  for (Pos ell = 2; ell <= maxd + 1 || !l_next_.empty(); ++ell) {
    if (ell >= inf_) break;
    ++stats_.iterations;
    std::swap(l_now_, l_next_);
    l_next_.clear();
    structural_pass(s_, static_cast<std::int32_t>(ell));
    structural_pass(t_, static_cast<std::int32_t>(ell));
    const std::int32_t k = static_cast<std::int32_t>(ell) - 1;
    process_level(s_, t_, 0, k, ell);
    if (ell == 2) process_level(t_, s_, 1, 1, ell);
    for (const auto& [ip, jp] : l_now_) {
      if (ip < 2 || jp < 2) continue;
      if (s_.sym(ip - 1) != t_.sym(jp - 1)) continue;
      const Symbol x = s_.sym(ip - 1);
      ++stats_.l_pairs_processed;
      walk(s_, t_, s_.prev_of(ip - 1) + 1, ip - 1, t_.prev_of(jp - 1) + 1,
           jp - 1, ell, x);
    }
    transition_to(s_, static_cast<std::int32_t>(ell) + 1);
    transition_to(t_, static_cast<std::int32_t>(ell) + 1);
  }
}

Pos ConnectionIndex::max_k() const {
  assert(!equal_);
  const Pos m = std::min(s_.level_of[1], t_.level_of[1]);
  assert(m < inf_);
  return m - 1;
}

namespace {

BlockRef block_in(const SimonTree& tree, const LevelIndex& levels, Pos n,
                  Pos i, std::int32_t level) {
  if (level <= 0) return BlockRef{1, n, tree.root()};
  if (level <= levels.max_depth) {
    const NodeId* base = levels.level_begin(level);
    const std::int32_t cnt = levels.level_size(level);
    std::int32_t lo = 0, hi = cnt;
    while (lo < hi) {
      const std::int32_t mid = (lo + hi) / 2;
      if (tree.start[static_cast<size_t>(base[mid])] <= i) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo > 0) {
      const NodeId v = base[lo - 1];
      if (tree.end[static_cast<size_t>(v)] >= i) {
        return BlockRef{tree.start[static_cast<size_t>(v)],
                        tree.end[static_cast<size_t>(v)], v};
      }
    }
  }
  return BlockRef{i, i, kNoNode};
}

}  // namespace

BlockRef ConnectionIndex::block_s(Pos i, std::int32_t level) const {
  return block_in(s_.tree, s_.levels, s_.n, i, level);
}

BlockRef ConnectionIndex::block_t(Pos j, std::int32_t level) const {
  return block_in(t_.tree, t_.levels, t_.n, j, level);
}

std::optional<Interval> ConnectionIndex::partner_in_t(
    const BlockRef& a) const {
  return node_or_upair_extent(s_, a.node, a.start);
}

std::optional<Interval> ConnectionIndex::partner_in_s(
    const BlockRef& b) const {
  return node_or_upair_extent(t_, b.node, b.start);
}

bool ConnectionIndex::s_connected(Pos i, Pos j, Pos k) const {
  assert(i >= 1 && i <= s_.n + 1);
  assert(j >= 1 && j <= t_.n + 1);
  if (k <= 0) return true;
  const bool es = i > s_.n, et = j > t_.n;
  if (es || et) return es && et;
  // Levels saturate at inf_: equivalence at inf_ - 1 = n_s + n_t already
  // forces equal suffixes, hence equivalence at every deeper level.
  if (k >= inf_) k = inf_ - 1;
  if (s_.level_of[static_cast<size_t>(i)] <= k) return false;
  if (t_.level_of[static_cast<size_t>(j)] <= k) return false;
  const BlockRef a = block_s(i, static_cast<std::int32_t>(k));
  const BlockRef b = block_t(j, static_cast<std::int32_t>(k));
  const auto pa = partner_in_t(a);
  return pa && pa->first == b.start && pa->second == b.end;
}

}  // namespace simonk
