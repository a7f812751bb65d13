#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace simonk {

using Pos = std::int32_t;
using Symbol = std::int32_t;

// A word over a dense integer alphabet {1..sigma}. Positions are 1-based.
class Word {
 public:
  Word() = default;
  Word(std::vector<Symbol> symbols, Symbol sigma)
      : symbols_(std::move(symbols)), sigma_(sigma) {}

  Pos size() const { return static_cast<Pos>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  Symbol sigma() const { return sigma_; }

  // 1-based access.
  Symbol at(Pos i) const { return symbols_[static_cast<size_t>(i) - 1]; }

  const std::vector<Symbol>& symbols() const { return symbols_; }

  bool operator==(const Word& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  Symbol sigma_ = 0;
};

// Bidirectional token <-> symbol-id map shared by a pair of words.
// Ids are assigned by ascending lexicographic order of the distinct tokens.
class AlphabetMap {
 public:
  AlphabetMap() = default;
  explicit AlphabetMap(std::vector<std::string> sorted_tokens)
      : tokens_(std::move(sorted_tokens)) {}

  Symbol sigma() const { return static_cast<Symbol>(tokens_.size()); }
  // 1-based id -> token.
  const std::string& token(Symbol id) const {
    return tokens_[static_cast<size_t>(id) - 1];
  }
  // token -> 1-based id, 0 if unknown.
  Symbol id(const std::string& token) const;

 private:
  std::vector<std::string> tokens_;  // sorted ascending
};

struct NormalizedPair {
  Word s;
  Word t;
  AlphabetMap alphabet;
};

// Maps two token sequences onto a shared dense alphabet {1..sigma}.
NormalizedPair normalize(const std::vector<std::string>& s_tokens,
                         const std::vector<std::string>& t_tokens);

// Convenience: one token per character.
NormalizedPair normalize_chars(const std::string& s, const std::string& t);

std::vector<std::string> split_tokens(const std::string& line);

// Sentinel for "no next occurrence": n + 2 (strictly above every real
// position and above the open root end n + 1).
inline Pos next_none(Pos n) { return n + 2; }

// X[i] = smallest j > i with w[j] = w[i], else n + 2. 1-based result[i-1].
std::vector<Pos> next_occurrence_array(const Word& w);

// P[i] = largest j < i with w[j] = w[i], else 0. 1-based result[i-1].
std::vector<Pos> prev_occurrence_array(const Word& w);

// True iff u embeds into w as a subsequence (greedy test).
bool is_subsequence(const std::vector<Symbol>& u, const Word& w);

}  // namespace simonk
