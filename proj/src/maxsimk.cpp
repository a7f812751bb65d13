#include "simonk/maxsimk.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "simonk/connection.hpp"

namespace simonk {
namespace {

// Per-letter sorted occurrence lists, CSR layout, for next-occurrence
// queries by binary search.
struct OccIndex {
  explicit OccIndex(const Word& w, Symbol sigma) {
    off.assign(static_cast<size_t>(sigma) + 2, 0);
    for (Pos p = 1; p <= w.size(); ++p) {
      ++off[static_cast<size_t>(w.at(p)) + 1];
    }
    for (size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
    pos.assign(static_cast<size_t>(w.size()), 0);
    std::vector<std::int32_t> head(off.begin(), off.end() - 1);
    for (Pos p = 1; p <= w.size(); ++p) {
      pos[static_cast<size_t>(head[static_cast<size_t>(w.at(p))]++)] = p;
    }
  }

  // First occurrence of x at position >= i, or 0 when there is none.
  Pos next_from(Symbol x, Pos i) const {
    const auto lo = pos.begin() + off[static_cast<size_t>(x)];
    const auto hi = pos.begin() + off[static_cast<size_t>(x) + 1];
    const auto it = std::lower_bound(lo, hi, i);
    return it == hi ? 0 : *it;
  }

  std::vector<std::int32_t> off;
  std::vector<Pos> pos;
};

// Walks one letter per step. State (i, j, K) keeps the suffixes s[i:], t[j:]
// distinguishable by length K but not by length K-1; each chosen letter x
// moves both suffixes past their first x and drops K by one. The final
// letter lands in exactly one suffix.
std::vector<Symbol> walk_distinguisher(const ConnectionIndex& ci) {
  const Word& s = ci.word_s();
  const Word& t = ci.word_t();
  const Symbol sigma = std::max(s.sigma(), t.sigma());
  const OccIndex so(s, sigma), to(t, sigma);
  Pos k = ci.max_k() + 1;
  Pos i = 1, j = 1;
  std::vector<Symbol> out;
  out.reserve(static_cast<size_t>(k));
  while (true) {
    const bool es = i > s.size(), et = j > t.size();
    assert(!(es && et));
    if (es || et) {
      // One suffix is empty; only an alphabet difference is left.
      assert(k == 1);
      out.push_back(es ? t.at(j) : s.at(i));
      return out;
    }
    if (k == 1) {
      for (Symbol x = 1; x <= sigma; ++x) {
        const bool ins = so.next_from(x, i) != 0;
        const bool int_ = to.next_from(x, j) != 0;
        if (ins != int_) {
          out.push_back(x);
          return out;
        }
      }
      throw std::logic_error("suffixes 1-equivalent at split depth 1");
    }
    bool advanced = false;
    for (Symbol x = 1; x <= sigma; ++x) {
      const Pos si = so.next_from(x, i);
      const Pos tj = to.next_from(x, j);
      if (si == 0 && tj == 0) continue;
      assert(si != 0 && tj != 0);  // suffix alphabets agree while k >= 2
      if (!ci.s_connected(si + 1, tj + 1, k - 1)) {
        out.push_back(x);
        i = si + 1;
        j = tj + 1;
        --k;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw std::logic_error("no splitting letter at depth k");
    }
  }
}

Analysis analyze_nonempty(const Word& s, const Word& t) {
  const ConnectionIndex ci(s, t);
  Analysis a;
  if (ci.words_equal()) {
    a.equal = true;
    return a;
  }
  a.max_k = ci.max_k();
  a.distinguisher = walk_distinguisher(ci);
  const bool ins = is_subsequence(a.distinguisher, s);
  const bool int_ = is_subsequence(a.distinguisher, t);
  if (ins == int_) {
    throw std::logic_error("distinguisher embeds into both or neither word");
  }
  a.in_s = ins;
  return a;
}

}  // namespace

Analysis analyze(const Word& s, const Word& t) {
  if (s.empty() || t.empty()) {
    Analysis a;
    if (s.empty() && t.empty()) {
      a.equal = true;
      return a;
    }
    // Empty versus non-empty: equivalent only at k = 0; one letter splits.
    a.max_k = 0;
    const Word& w = s.empty() ? t : s;
    a.distinguisher = {w.at(1)};
    a.in_s = !s.empty();
    return a;
  }
  return analyze_nonempty(s, t);
}

std::optional<Pos> max_sim_k(const Word& s, const Word& t) {
  if (s == t) return std::nullopt;
  if (s.empty() || t.empty()) return 0;
  const ConnectionIndex ci(s, t);
  return ci.max_k();
}

bool sim_k(const Word& s, const Word& t, Pos k) {
  if (k <= 0) return true;
  const auto mk = max_sim_k(s, t);
  return !mk || *mk >= k;
}

std::vector<Symbol> distinguishing_word(const Word& s, const Word& t) {
  if (s == t) {
    throw std::invalid_argument("equal words have no distinguisher");
  }
  return analyze(s, t).distinguisher;
}

}  // namespace simonk
