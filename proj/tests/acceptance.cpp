// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned as constants next to each criterion. The
// timing criteria (6b, 7) assume an otherwise idle machine.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "simonk/connection.hpp"
#include "simonk/interval_sets.hpp"
#include "simonk/maxsimk.hpp"
#include "simonk/oracle.hpp"
#include "simonk/simon_tree.hpp"
#include "simonk/word.hpp"

using namespace simonk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

void report(int number, const Outcome& o) {
  std::printf("criterion %d: %s (%s)\n", number, o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// All non-empty words over [1..sigma] up to max_len, shortest first.
std::vector<Word> all_words(Symbol sigma, Pos max_len) {
  std::vector<Word> out;
  for (Pos len = 1; len <= max_len; ++len) {
    std::vector<Symbol> v(static_cast<size_t>(len), 1);
    while (true) {
      out.emplace_back(v, sigma);
      Pos p = len - 1;
      while (p >= 0 && v[static_cast<size_t>(p)] == sigma) {
        v[static_cast<size_t>(p)] = 1;
        --p;
      }
      if (p < 0) break;
      ++v[static_cast<size_t>(p)];
    }
  }
  return out;
}

Word random_word(std::mt19937_64& rng, Pos len, Symbol sigma) {
  std::vector<Symbol> v(static_cast<size_t>(len));
  for (auto& x : v)
    x = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma)) + 1;
  return Word(std::move(v), sigma);
}

// Spectra ids of every suffix of w at every level 1..k_max; ids[k][i].
std::vector<std::vector<int>> spectra_table(const Word& w, Pos k_max) {
  std::vector<std::vector<int>> ids(static_cast<size_t>(k_max) + 1);
  for (Pos k = 1; k <= k_max; ++k) {
    auto& row = ids[static_cast<size_t>(k)];
    row.resize(static_cast<size_t>(w.size()) + 2);
    for (Pos i = 1; i <= w.size() + 1; ++i)
      row[static_cast<size_t>(i)] = oracle_spectra_id(w, i, k);
  }
  return ids;
}

// ---------------------------------------------------------------- criterion 1
// Worked examples: the next-occurrence array of bacbaabada (sentinel n+2),
// and max k for acab vs acabba. Budget: < 1 s.
Outcome criterion1() {
  constexpr double kMaxSeconds = 1.0;
  const auto t0 = Clock::now();
  int bad = 0;

  const NormalizedPair bw = normalize_chars("bacbaabada", "x");
  const std::vector<Pos> want = {4, 5, 12, 7, 6, 8, 12, 10, 12, 12};
  if (next_occurrence_array(bw.s) != want) ++bad;
  if (next_none(10) != 12) ++bad;

  const NormalizedPair np = normalize_chars("acab", "acabba");
  if (max_sim_k(np.s, np.t) != std::optional<Pos>(1)) ++bad;
  if (!sim_k(np.s, np.t, 1)) ++bad;
  if (sim_k(np.s, np.t, 2)) ++bad;

  const double dt = seconds_since(t0);
  return {bad == 0 && dt < kMaxSeconds,
          std::to_string(bad) + " mismatches, " + fmt(dt) + " s"};
}

// ---------------------------------------------------------------- criterion 2
// max_sim_k == oracle_max_k on every ordered pair: binary words up to
// length 8 and ternary words up to length 5 (equal pairs included).
Outcome criterion2(const std::vector<Word>& bin8,
                   const std::vector<Word>& ter5) {
  const auto t0 = Clock::now();
  std::int64_t bad = 0, pairs = 0;
  for (const auto* corpus : {&bin8, &ter5}) {
    for (const Word& s : *corpus) {
      for (const Word& t : *corpus) {
        ++pairs;
        const auto got = max_sim_k(s, t);
        const auto want = oracle_max_k(s, t);
        if (got != want) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " +
                        std::to_string(bad) + " mismatches, " +
                        fmt(seconds_since(t0)) + " s"};
}

// ---------------------------------------------------------------- criterion 3
// Tree levels match the oracle block partition for every corpus word and
// every level k <= |w|.
Outcome criterion3(const std::vector<Word>& bin8,
                   const std::vector<Word>& ter5) {
  const auto t0 = Clock::now();
  std::int64_t bad = 0, checks = 0;
  for (const auto* corpus : {&bin8, &ter5}) {
    for (const Word& w : *corpus) {
      const SimonTree tree = build_simon_tree(w);
      for (Pos k = 0; k <= w.size(); ++k) {
        ++checks;
        if (k_blocks(tree, k) != oracle_k_blocks(w, k)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " partitions, " +
                        std::to_string(bad) + " mismatches, " +
                        fmt(seconds_since(t0)) + " s"};
}

// ---------------------------------------------------------------- criterion 4
// 10,000 seeded random pairs, lengths <= 14, alphabets 2..5: max k matches
// the oracle; the distinguisher has the oracle's length and embeds into
// exactly one input.
Outcome criterion4() {
  constexpr int kPairs = 10000;
  constexpr std::uint64_t kSeed = 0x5eed4u;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed);
  std::int64_t bad = 0;
  for (int round = 0; round < kPairs; ++round) {
    const Symbol sigma = static_cast<Symbol>(rng() % 4 + 2);
    const Word s = random_word(rng, static_cast<Pos>(rng() % 15), sigma);
    const Word t = random_word(rng, static_cast<Pos>(rng() % 15), sigma);
    const auto want = oracle_max_k(s, t);
    const Analysis a = analyze(s, t);
    if (s == t) {
      if (!a.equal || want.has_value()) ++bad;
      continue;
    }
    bool ok = want.has_value() && a.max_k == *want;
    ok = ok && a.distinguisher.size() == oracle_min_distinguisher(s, t).size();
    const bool in_s = is_subsequence(a.distinguisher, s);
    const bool in_t = is_subsequence(a.distinguisher, t);
    ok = ok && (in_s != in_t) && (a.in_s == in_s);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(kPairs) + " pairs, " +
                        std::to_string(bad) + " mismatches, " +
                        fmt(seconds_since(t0)) + " s"};
}

// ---------------------------------------------------------------- criterion 5
// Block connection semantics: on the criterion-2 corpora, for every pair of
// suffix positions (empty suffixes included) and every level k up to
// max(|s|,|t|)+1, s_connected equals spectra-set equality.
Outcome criterion5(const std::vector<Word>& bin8,
                   const std::vector<Word>& ter5) {
  const auto t0 = Clock::now();
  std::int64_t bad = 0, checks = 0;

  for (const auto* corpus : {&bin8, &ter5}) {
    const Pos max_len = corpus->back().size();
    const Pos k_max = max_len + 1;
    std::vector<std::vector<std::vector<int>>> tables;
    tables.reserve(corpus->size());
    for (const Word& w : *corpus) tables.push_back(spectra_table(w, k_max));

    for (size_t a = 0; a < corpus->size(); ++a) {
      const Word& s = (*corpus)[a];
      for (size_t b = 0; b < corpus->size(); ++b) {
        const Word& t = (*corpus)[b];
        const ConnectionIndex ci(s, t);
        const Pos kk = std::max(s.size(), t.size()) + 1;
        for (Pos k = 1; k <= kk; ++k) {
          const auto& ids_s = tables[a][static_cast<size_t>(k)];
          const auto& ids_t = tables[b][static_cast<size_t>(k)];
          for (Pos i = 1; i <= s.size() + 1; ++i) {
            const int want_id = ids_s[static_cast<size_t>(i)];
            for (Pos j = 1; j <= t.size() + 1; ++j) {
              const bool want = want_id == ids_t[static_cast<size_t>(j)];
              if (ci.s_connected(i, j, k) != want) ++bad;
              ++checks;
            }
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " checks, " +
                        std::to_string(bad) + " mismatches, " +
                        fmt(seconds_since(t0)) + " s"};
}

// ---------------------------------------------------------------- criterion 6
// Interval structures: 1,000 random op sequences against set-based reference
// models, then a scaling bound: n init + n mixed ops at n = 10^6 in < 1 s
// per structure.
Outcome criterion6() {
  constexpr int kSequences = 1000;
  constexpr std::uint64_t kSeed = 0x5eed6u;
  constexpr Pos kBigN = 1000000;
  constexpr double kMaxSeconds = 1.0;

  std::mt19937_64 rng(kSeed);
  std::int64_t bad = 0;

  for (int seq = 0; seq < kSequences; ++seq) {
    const Pos n = static_cast<Pos>(rng() % 200 + 1);
    const int ops = static_cast<int>(10 * n);

    IntervalSplitFind sf(n);
    std::set<Pos> sf_borders;  // border b cuts between b and b+1
    auto sf_model_find = [&](Pos u) {
      auto it = sf_borders.lower_bound(u);
      Pos hi = (it == sf_borders.end()) ? n : *it;
      Pos lo = (it == sf_borders.begin()) ? 1 : *std::prev(it) + 1;
      return Interval{lo, hi};
    };

    IntervalUnionFind uf(n);
    std::set<Pos> uf_borders;  // borders still present; merge removes one
    for (Pos b = 1; b < n; ++b) uf_borders.insert(b);
    auto uf_model_find = [&](Pos u) {
      auto it = uf_borders.lower_bound(u);
      Pos hi = (it == uf_borders.end()) ? n : *it;
      Pos lo = (it == uf_borders.begin()) ? 1 : *std::prev(it) + 1;
      return Interval{lo, hi};
    };

    for (int op = 0; op < ops; ++op) {
      const Pos u = static_cast<Pos>(rng() % static_cast<std::uint64_t>(n)) + 1;
      switch (rng() % 4) {
        case 0:
          sf.split(u);
          if (u < n) sf_borders.insert(u);
          break;
        case 1:
          if (sf.find(u) != sf_model_find(u)) ++bad;
          break;
        case 2: {
          const auto iv = uf_model_find(u);
          if (iv.second < n) {
            uf.merge(iv.second);
            uf_borders.erase(iv.second);
          }
          break;
        }
        default:
          if (uf.find(u) != uf_model_find(u)) ++bad;
          break;
      }
    }
    for (Pos u = 1; u <= n; ++u) {
      if (sf.find(u) != sf_model_find(u)) ++bad;
      if (uf.find(u) != uf_model_find(u)) ++bad;
    }
  }

  // Scaling: interleave finds with splits (resp. merges) over 10^6 elements.
  std::uint64_t sink = 0;
  const auto t_sf = Clock::now();
  {
    IntervalSplitFind sf(kBigN);
    std::mt19937_64 prng(kSeed + 1);
    for (Pos op = 0; op < kBigN; ++op) {
      const Pos u =
          static_cast<Pos>(prng() % static_cast<std::uint64_t>(kBigN)) + 1;
      if (op & 1) {
        sink += static_cast<std::uint64_t>(sf.find(u).first);
      } else {
        sf.split(u);
      }
    }
  }
  const double sf_secs = seconds_since(t_sf);

  const auto t_uf = Clock::now();
  {
    IntervalUnionFind uf(kBigN);
    std::mt19937_64 prng(kSeed + 2);
    for (Pos op = 0; op < kBigN; ++op) {
      const Pos u =
          static_cast<Pos>(prng() % static_cast<std::uint64_t>(kBigN)) + 1;
      const Interval iv = uf.find(u);
      sink += static_cast<std::uint64_t>(iv.first);
      if (iv.second < kBigN) uf.merge(iv.second);
    }
  }
  const double uf_secs = seconds_since(t_uf);

  const bool pass =
      bad == 0 && sf_secs < kMaxSeconds && uf_secs < kMaxSeconds && sink != 1;
  return {pass, std::to_string(bad) + " mismatches, split-find " +
                    fmt(sf_secs) + " s, union-find " + fmt(uf_secs) +
                    " s (bound " + fmt(kMaxSeconds) + " s)"};
}

// ---------------------------------------------------------------- criterion 7
// Linear scaling on near-identical pairs (4 random edits, alphabet 26):
// per-char time at n = 10^7 at most 3x per-char time at n = 10^5, and the
// n = 10^6 instance solved in < 2 s. Runs last; it is the memory peak.
Outcome criterion7() {
  constexpr Symbol kSigma = 26;
  constexpr int kEdits = 4;
  constexpr double kMaxRatio = 3.0;
  constexpr double kMaxSecondsAt1M = 2.0;
  constexpr std::uint64_t kSeed = 0x5eed7u;

  std::mt19937_64 rng(kSeed);
  auto near_pair = [&](Pos n) {
    Word s = random_word(rng, n, kSigma);
    std::vector<Symbol> v(s.symbols());
    for (int e = 0; e < kEdits; ++e) {
      v[rng() % v.size()] =
          static_cast<Symbol>(rng() % static_cast<std::uint64_t>(kSigma)) + 1;
    }
    return std::pair<Word, Word>(std::move(s), Word(std::move(v), kSigma));
  };

  auto time_once = [&](Pos n) {
    const auto [s, t] = near_pair(n);
    const auto t0 = Clock::now();
    const auto k = max_sim_k(s, t);
    const double dt = seconds_since(t0);
    return std::pair<double, bool>(dt, k.has_value());
  };

  // Mean of a few runs at the small sizes, single run at 10^7.
  double t5 = 0;
  for (int r = 0; r < 5; ++r) t5 += time_once(100000).first;
  t5 /= 5;

  double t6 = 0;
  for (int r = 0; r < 3; ++r) t6 += time_once(1000000).first;
  t6 /= 3;

  const double t7 = time_once(10000000).first;

  const double per5 = t5 / 1e5, per7 = t7 / 1e7;
  const double ratio = per7 / per5;
  const bool pass = ratio <= kMaxRatio && t6 < kMaxSecondsAt1M;
  return {pass, "ns/char at 1e5: " + fmt(per5 * 1e9) + ", at 1e7: " +
                    fmt(per7 * 1e9) + ", ratio " + fmt(ratio) + " (bound " +
                    fmt(kMaxRatio) + "), 1e6 in " + fmt(t6) + " s (bound " +
                    fmt(kMaxSecondsAt1M) + " s)"};
}

// ---------------------------------------------------------------- criterion 8
// Invariant suites, zero violations required:
//   a. partner extents of live blocks never cross and stay disjoint;
//   b. spectra equality implies containment in the partner extent on both
//      sides (pairing over-approximates the semantic connection);
//   c. (k+1)-blocks refine k-blocks, per position and per partition;
//   d. a position's block stays paired at every level below its recorded
//      level, and the recorded level matches the smallest level without a
//      semantically equivalent suffix on the other side;
//   e. spectra equality at k implies spectra equality at every k' < k.
Outcome criterion8(const std::vector<Word>& bin8,
                   const std::vector<Word>& ter5) {
  const auto t0 = Clock::now();
  std::int64_t bad_cross = 0, bad_subset = 0, bad_refine = 0, bad_level = 0,
               bad_mono = 0;

  // a. non-crossing, on the full criterion-2 corpora.
  auto check_non_crossing = [&](const ConnectionIndex& ci) {
    const Pos kk = std::max(ci.n_s(), ci.n_t()) + 1;
    for (Pos k = 1; k <= kk; ++k) {
      for (int side = 0; side < 2; ++side) {
        const Pos n = side == 0 ? ci.n_s() : ci.n_t();
        Pos prev_end = 0;
        Pos i = 1;
        while (i <= n) {
          const BlockRef blk = side == 0 ? ci.block_s(i, k) : ci.block_t(i, k);
          const Pos lvl = side == 0 ? ci.level_s(i) : ci.level_t(i);
          if (lvl > k) {
            const auto ext =
                side == 0 ? ci.partner_in_t(blk) : ci.partner_in_s(blk);
            if (!ext) {
              ++bad_cross;  // live blocks must be paired
            } else {
              if (ext->first <= prev_end) ++bad_cross;  // order or overlap
              if (ext->first > ext->second) ++bad_cross;
              prev_end = ext->second;
            }
          }
          i = blk.end + 1;
        }
      }
    }
  };
  for (const auto* corpus : {&bin8, &ter5}) {
    for (const Word& s : *corpus)
      for (const Word& t : *corpus) check_non_crossing(ConnectionIndex(s, t));
  }

  // b, d. spectra-vs-pairing invariants on smaller slices (binary up to 6,
  // ternary up to 4), where full id tables are cheap.
  for (const auto& slice :
       {all_words(2, 6), all_words(3, 4)}) {
    const Pos k_max = slice.back().size() + 1;
    std::vector<std::vector<std::vector<int>>> tables;
    tables.reserve(slice.size());
    for (const Word& w : slice) tables.push_back(spectra_table(w, k_max));

    for (size_t a = 0; a < slice.size(); ++a) {
      for (size_t b = 0; b < slice.size(); ++b) {
        const Word& s = slice[a];
        const Word& t = slice[b];
        const ConnectionIndex ci(s, t);
        const Pos kk = std::max(s.size(), t.size()) + 1;

        // b. S-connected positions lie inside each other's partner extents.
        for (Pos k = 1; k <= kk; ++k) {
          const auto& ids_s = tables[a][static_cast<size_t>(k)];
          const auto& ids_t = tables[b][static_cast<size_t>(k)];
          for (Pos i = 1; i <= s.size(); ++i) {
            for (Pos j = 1; j <= t.size(); ++j) {
              if (ids_s[static_cast<size_t>(i)] !=
                  ids_t[static_cast<size_t>(j)])
                continue;
              if (ci.level_s(i) <= k || ci.level_t(j) <= k) {
                ++bad_subset;
                continue;
              }
              const auto ps = ci.partner_in_t(ci.block_s(i, k));
              const auto pt = ci.partner_in_s(ci.block_t(j, k));
              if (!ps || j < ps->first || j > ps->second) ++bad_subset;
              if (!pt || i < pt->first || i > pt->second) ++bad_subset;
            }
          }
        }

        // d. levels: paired below the recorded level, and the recorded level
        // is the first with no equivalent suffix across.
        for (Pos i = 1; i <= s.size(); ++i) {
          const Pos lvl = ci.level_s(i);
          for (Pos k = 1; k < std::min(lvl, kk + 1); ++k) {
            if (!ci.partner_in_t(ci.block_s(i, k))) ++bad_level;
          }
          Pos first_lonely = 0;
          for (Pos k = 1; k <= kk && first_lonely == 0; ++k) {
            bool any = false;
            for (Pos j = 1; j <= t.size() && !any; ++j) {
              any = tables[a][static_cast<size_t>(k)][static_cast<size_t>(i)] ==
                    tables[b][static_cast<size_t>(k)][static_cast<size_t>(j)];
            }
            if (!any) first_lonely = k;
          }
          if (first_lonely == 0) {
            if (lvl != ci.inf_level()) ++bad_level;
          } else if (lvl != first_lonely) {
            ++bad_level;
          }
        }
      }
    }
  }

  // c. refinement containment on corpus words plus larger random words.
  auto check_refinement = [&](const Word& w, Pos k_hi) {
    const SimonTree tree = build_simon_tree(w);
    std::vector<Interval> prev = k_blocks(tree, 0);
    for (Pos k = 1; k <= k_hi; ++k) {
      const std::vector<Interval> cur = k_blocks(tree, k);
      // Each block of cur must sit inside a single block of prev.
      size_t at = 0;
      for (const Interval& b : cur) {
        while (at < prev.size() && prev[at].second < b.second) ++at;
        if (at >= prev.size() || prev[at].first > b.first) ++bad_refine;
      }
      prev = cur;
    }
  };
  for (const auto* corpus : {&bin8, &ter5})
    for (const Word& w : *corpus) check_refinement(w, w.size() + 1);
  {
    std::mt19937_64 rng(0x5eed8u);
    for (int round = 0; round < 200; ++round) {
      const Symbol sigma = static_cast<Symbol>(rng() % 4 + 2);
      const Pos n = static_cast<Pos>(rng() % 500 + 1);
      check_refinement(random_word(rng, n, sigma), 20);
    }
  }

  // e. spectra monotonicity of the oracle itself, binary words up to 5.
  {
    const auto slice = all_words(2, 5);
    const Pos k_max = 6;
    std::vector<std::vector<std::vector<int>>> tables;
    for (const Word& w : slice) tables.push_back(spectra_table(w, k_max));
    for (size_t a = 0; a < slice.size(); ++a) {
      for (size_t b = 0; b < slice.size(); ++b) {
        for (Pos k = 2; k <= k_max; ++k) {
          for (Pos i = 1; i <= slice[a].size() + 1; ++i) {
            for (Pos j = 1; j <= slice[b].size() + 1; ++j) {
              const bool eq_k =
                  tables[a][static_cast<size_t>(k)][static_cast<size_t>(i)] ==
                  tables[b][static_cast<size_t>(k)][static_cast<size_t>(j)];
              const bool eq_km1 =
                  tables[a][static_cast<size_t>(k - 1)]
                        [static_cast<size_t>(i)] ==
                  tables[b][static_cast<size_t>(k - 1)]
                        [static_cast<size_t>(j)];
              if (eq_k && !eq_km1) ++bad_mono;
            }
          }
        }
      }
    }
  }

  const std::int64_t bad =
      bad_cross + bad_subset + bad_refine + bad_level + bad_mono;
  return {bad == 0,
          "violations: crossing " + std::to_string(bad_cross) + ", subset " +
              std::to_string(bad_subset) + ", refinement " +
              std::to_string(bad_refine) + ", levels " +
              std::to_string(bad_level) + ", monotonicity " +
              std::to_string(bad_mono) + ", " + fmt(seconds_since(t0)) +
              " s"};
}

}  // namespace

int main() {
  const std::vector<Word> bin8 = all_words(2, 8);
  const std::vector<Word> ter5 = all_words(3, 5);

  bool all_pass = true;
  auto run = [&](int number, Outcome o) {
    report(number, o);
    all_pass = all_pass && o.pass;
  };

  run(1, criterion1());
  run(2, criterion2(bin8, ter5));
  run(3, criterion3(bin8, ter5));
  run(4, criterion4());
  run(5, criterion5(bin8, ter5));
  run(6, criterion6());
  run(8, criterion8(bin8, ter5));
  run(7, criterion7());  // timing and memory peak; keep it last

  std::printf("%s\n", all_pass ? "all criteria passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}
