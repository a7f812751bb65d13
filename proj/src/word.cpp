#include "simonk/word.hpp"

#include <algorithm>
#include <sstream>

namespace simonk {

Symbol AlphabetMap::id(const std::string& token) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end() || *it != token) return 0;
  return static_cast<Symbol>(it - tokens_.begin()) + 1;
}

namespace {

std::vector<Symbol> map_tokens(const std::vector<std::string>& tokens,
                               const AlphabetMap& alphabet) {
  std::vector<Symbol> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) out.push_back(alphabet.id(tok));
  return out;
}

}  // namespace

NormalizedPair normalize(const std::vector<std::string>& s_tokens,
                         const std::vector<std::string>& t_tokens) {
  std::vector<std::string> all;
  all.reserve(s_tokens.size() + t_tokens.size());
  all.insert(all.end(), s_tokens.begin(), s_tokens.end());
  all.insert(all.end(), t_tokens.begin(), t_tokens.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  AlphabetMap alphabet(std::move(all));
  Symbol sigma = alphabet.sigma();
  return NormalizedPair{Word(map_tokens(s_tokens, alphabet), sigma),
                        Word(map_tokens(t_tokens, alphabet), sigma),
                        std::move(alphabet)};
}

NormalizedPair normalize_chars(const std::string& s, const std::string& t) {
  auto explode = [](const std::string& w) {
    std::vector<std::string> toks;
    toks.reserve(w.size());
    for (char c : w) toks.emplace_back(1, c);
    return toks;
  };
  return normalize(explode(s), explode(t));
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

std::vector<Pos> next_occurrence_array(const Word& w) {
  Pos n = w.size();
  std::vector<Pos> next(static_cast<size_t>(n), next_none(n));
  std::vector<Pos> last(static_cast<size_t>(w.sigma()) + 1, 0);
  for (Pos i = n; i >= 1; --i) {
    Symbol x = w.at(i);
    if (last[static_cast<size_t>(x)] != 0)
      next[static_cast<size_t>(i) - 1] = last[static_cast<size_t>(x)];
    last[static_cast<size_t>(x)] = i;
  }
  return next;
}

std::vector<Pos> prev_occurrence_array(const Word& w) {
  Pos n = w.size();
  std::vector<Pos> prev(static_cast<size_t>(n), 0);
  std::vector<Pos> last(static_cast<size_t>(w.sigma()) + 1, 0);
  for (Pos i = 1; i <= n; ++i) {
    Symbol x = w.at(i);
    prev[static_cast<size_t>(i) - 1] = last[static_cast<size_t>(x)];
    last[static_cast<size_t>(x)] = i;
  }
  return prev;
}

bool is_subsequence(const std::vector<Symbol>& u, const Word& w) {
  size_t at = 0;
  for (Pos p = 1; p <= w.size() && at < u.size(); ++p) {
    if (w.at(p) == u[at]) ++at;
  }
  return at == u.size();
}

}  // namespace simonk
