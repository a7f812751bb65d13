#pragma once

#include <optional>
#include <vector>

#include "simonk/word.hpp"

namespace simonk {

// Combined answer for a pair of words.
struct Analysis {
  bool equal = false;  // s == t; then s ~k t for every k
  Pos max_k = 0;       // largest k with s ~k t (meaningful when !equal)
  // Shortest word embedding into exactly one input; length max_k + 1.
  std::vector<Symbol> distinguisher;
  bool in_s = false;  // true when the distinguisher embeds into s
};

// Largest k with s ~k t; nullopt when s == t (every k works).
std::optional<Pos> max_sim_k(const Word& s, const Word& t);

bool sim_k(const Word& s, const Word& t, Pos k);

// Shortest distinguishing word; requires s != t.
std::vector<Symbol> distinguishing_word(const Word& s, const Word& t);

Analysis analyze(const Word& s, const Word& t);

}  // namespace simonk
