#include "simonk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace simonk {
namespace {

// Global intern tables: spectra keyed by (suffix bytes, k), set identities
// keyed by a canonical serialization of the set.
std::unordered_map<std::string, int>& memo() {
  static std::unordered_map<std::string, int> m;
  return m;
}
std::unordered_map<std::string, int>& intern() {
  static std::unordered_map<std::string, int> m;
  return m;
}

std::string suffix_bytes(const Word& w, Pos i) {
  std::string b;
  for (Pos p = i; p <= w.size(); ++p) {
    b.push_back(static_cast<char>(w.at(p)));
  }
  return b;
}

}  // namespace

int oracle_spectra_id(const Word& w, Pos i, Pos k) {
  if (i < 1 || i > w.size() + 1) {
    throw std::invalid_argument("oracle_spectra_id: position out of range");
  }
  const std::string suf = suffix_bytes(w, i);
  const int n = static_cast<int>(suf.size());
  if (n > kOracleMaxLen) {
    throw std::invalid_argument("oracle_spectra_id: suffix too long");
  }
  const int cap = std::min<int>(k < 0 ? 0 : static_cast<int>(k), n);
  std::string key = suf;
  key.push_back(static_cast<char>(0x7e));
  key.push_back(static_cast<char>(cap));
  if (auto it = memo().find(key); it != memo().end()) return it->second;

  std::set<std::string> facts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > cap) continue;
    std::string f;
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) f.push_back(suf[static_cast<size_t>(b)]);
    }
    facts.insert(std::move(f));
  }
  std::string canon;
  for (const std::string& f : facts) {
    canon.append(f);
    canon.push_back(static_cast<char>(0x7f));
  }
  const int id = static_cast<int>(
      intern().emplace(std::move(canon), static_cast<int>(intern().size()))
          .first->second);
  memo().emplace(std::move(key), id);
  return id;
}

bool oracle_sim_k(const Word& s, const Word& t, Pos k) {
  return oracle_spectra_id(s, 1, k) == oracle_spectra_id(t, 1, k);
}

std::optional<Pos> oracle_max_k(const Word& s, const Word& t) {
  if (s == t) return std::nullopt;
  Pos k = 0;
  while (oracle_sim_k(s, t, k + 1)) ++k;
  return k;
}

std::vector<Interval> oracle_k_blocks(const Word& w, Pos k) {
  std::vector<Interval> out;
  Pos start = 1;
  for (Pos i = 2; i <= w.size(); ++i) {
    if (oracle_spectra_id(w, i, k) != oracle_spectra_id(w, start, k)) {
      out.emplace_back(start, i - 1);
      start = i;
    }
  }
  if (w.size() >= 1) out.emplace_back(start, w.size());
  return out;
}

std::vector<Symbol> oracle_min_distinguisher(const Word& s, const Word& t) {
  const auto mk = oracle_max_k(s, t);
  if (!mk) throw std::invalid_argument("words are equal");
  const Pos len = *mk + 1;
  Symbol sigma = 0;
  for (Pos p = 1; p <= s.size(); ++p) sigma = std::max(sigma, s.at(p));
  for (Pos p = 1; p <= t.size(); ++p) sigma = std::max(sigma, t.at(p));
  std::vector<Symbol> u(static_cast<size_t>(len), 1);
  while (true) {
    if (is_subsequence(u, s) != is_subsequence(u, t)) return u;
    // Next word of the same length in lexicographic order.
    size_t d = u.size();
    while (d > 0 && u[d - 1] == sigma) {
      u[d - 1] = 1;
      --d;
    }
    if (d == 0) break;
    ++u[d - 1];
  }
  throw std::logic_error("no distinguisher at length max_k + 1");
}

}  // namespace simonk
