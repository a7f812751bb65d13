#pragma once

#include <optional>
#include <vector>

#include "simonk/interval_sets.hpp"
#include "simonk/word.hpp"

namespace simonk {

// Brute-force reference implementations, straight from the definitions.
// Subsequence sets are enumerated exhaustively, so suffixes handed to the
// spectra functions must not exceed kOracleMaxLen positions.

inline constexpr Pos kOracleMaxLen = 16;

// Interned identity of the set of scattered factors of length <= k of the
// suffix w[i:] (i == |w|+1 denotes the empty suffix). Equal ids mean equal
// sets, across every word and suffix seen by the process.
int oracle_spectra_id(const Word& w, Pos i, Pos k);

bool oracle_sim_k(const Word& s, const Word& t, Pos k);

// Largest k with s ~k t, or nullopt when the words are equal (then every k
// works).
std::optional<Pos> oracle_max_k(const Word& s, const Word& t);

// Maximal runs of suffix positions 1..|w| whose suffixes are ~k-equivalent.
std::vector<Interval> oracle_k_blocks(const Word& w, Pos k);

// Shortest word that is a scattered factor of exactly one of s, t
// (lexicographically smallest among those). Requires s != t.
std::vector<Symbol> oracle_min_distinguisher(const Word& s, const Word& t);

}  // namespace simonk
