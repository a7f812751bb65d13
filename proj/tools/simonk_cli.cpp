// Command-line front end: maxk / check / tree / bench.
//
// Exit codes: 0 success (or "similar" for check), 1 not similar (check),
// 2 usage or input-domain error, 3 I/O or internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "simonk/maxsimk.hpp"
#include "simonk/simon_tree.hpp"
#include "simonk/word.hpp"

namespace {

using nlohmann::json;
using namespace simonk;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Raw word text -> token list. chars mode: every non-whitespace character is
// a symbol; tokens mode: whitespace-separated opaque tokens.
std::vector<std::string> to_tokens(const std::string& raw, bool tokens_mode) {
  if (tokens_mode) return split_tokens(raw);
  std::vector<std::string> out;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
  }
  return out;
}

// Canonical text of a token list; also the digest input.
std::string render_tokens(const std::vector<std::string>& toks,
                          bool tokens_mode) {
  std::string out;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (tokens_mode && i > 0) out.push_back(' ');
    out += toks[i];
  }
  return out;
}

std::string render_symbols(const std::vector<Symbol>& syms,
                           const AlphabetMap& alphabet, bool tokens_mode) {
  std::vector<std::string> toks;
  toks.reserve(syms.size());
  for (Symbol x : syms) toks.push_back(alphabet.token(x));
  return render_tokens(toks, tokens_mode);
}

std::vector<std::string> read_lines(std::istream& in, size_t want,
                                    const std::string& source) {
  std::vector<std::string> lines;
  std::string line;
  while (lines.size() < want && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.size() < want) {
    throw IoError("expected " + std::to_string(want) + " line(s) from " +
                  source + ", got " + std::to_string(lines.size()));
  }
  return lines;
}

// Words for a subcommand, from exactly one of: positional args, --file,
// --stdin. One word per line in the file/stdin forms.
std::vector<std::string> gather_words(const std::vector<std::string>& args,
                                      const std::string& file, bool use_stdin,
                                      size_t want) {
  const int sources =
      (args.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (use_stdin ? 1 : 0);
  if (sources != 1) {
    throw InputError(
        "provide the word(s) exactly one way: positional arguments, --file, "
        "or --stdin");
  }
  if (!args.empty()) {
    if (args.size() != want) {
      throw InputError("expected " + std::to_string(want) +
                       " word argument(s), got " + std::to_string(args.size()));
    }
    return args;
  }
  if (use_stdin) return read_lines(std::cin, want, "stdin");
  std::ifstream in(file, std::ios::binary);
  if (!in.good()) throw IoError("cannot open " + file);
  return read_lines(in, want, file);
}

struct PairInput {
  NormalizedPair np;
  std::string text_s, text_t;
};

PairInput load_pair(const std::vector<std::string>& args,
                    const std::string& file, bool use_stdin,
                    bool tokens_mode) {
  const auto raw = gather_words(args, file, use_stdin, 2);
  const auto ts = to_tokens(raw[0], tokens_mode);
  const auto tt = to_tokens(raw[1], tokens_mode);
  return PairInput{normalize(ts, tt), render_tokens(ts, tokens_mode),
                   render_tokens(tt, tokens_mode)};
}

int cmd_maxk(const PairInput& in, bool tokens_mode, bool distinguish,
             bool as_json) {
  const Analysis a = analyze(in.np.s, in.np.t);
  const std::string dist =
      a.equal ? ""
              : render_symbols(a.distinguisher, in.np.alphabet, tokens_mode);
  if (as_json) {
    json rec;
    rec["command"] = "maxk";
    if (a.equal)
      rec["k"] = "inf";
    else
      rec["k"] = a.max_k;
    rec["equal"] = a.equal;
    rec["distinguisher"] = a.equal ? json(nullptr) : json(dist);
    rec["distinguisher_in"] =
        a.equal ? json(nullptr) : json(a.in_s ? "s" : "t");
    rec["digest_s"] = hex64(fnv1a64(in.text_s));
    rec["digest_t"] = hex64(fnv1a64(in.text_t));
    std::cout << rec.dump() << "\n";
    return 0;
  }
  if (a.equal) {
    std::cout << "k=inf\n";
    return 0;
  }
  std::cout << "k=" << a.max_k << "\n";
  if (distinguish) {
    std::cout << "distinguisher=" << dist << " in=" << (a.in_s ? "s" : "t")
              << "\n";
  }
  return 0;
}

int cmd_check(const PairInput& in, Pos k, bool as_json) {
  const bool similar = sim_k(in.np.s, in.np.t, k);
  if (as_json) {
    json rec;
    rec["command"] = "check";
    rec["k"] = k;
    rec["similar"] = similar;
    rec["digest_s"] = hex64(fnv1a64(in.text_s));
    rec["digest_t"] = hex64(fnv1a64(in.text_t));
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << (similar ? "true" : "false") << "\n";
  }
  return similar ? 0 : 1;
}

int cmd_tree(const std::vector<std::string>& args, const std::string& file,
             bool use_stdin, bool tokens_mode, bool transform) {
  const auto raw = gather_words(args, file, use_stdin, 1);
  const auto toks = to_tokens(raw[0], tokens_mode);
  if (toks.empty()) throw InputError("the empty word has no tree");
  const NormalizedPair np = normalize(toks, {});
  SimonTree tree = build_simon_tree(np.s);
  if (transform) transform_tree(tree);
  std::cout << export_dot(tree, np.s, np.alphabet);
  return 0;
}

Word random_word(std::mt19937_64& rng, Pos len, Symbol sigma) {
  std::vector<Symbol> v(static_cast<size_t>(len));
  for (auto& x : v)
    x = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma)) + 1;
  return Word(std::move(v), sigma);
}

int cmd_bench(const std::vector<std::uint64_t>& sizes, Symbol sigma, int reps,
              std::uint64_t seed, const std::string& mode, int edits,
              bool as_json) {
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1])
      throw InputError("--sizes must be strictly ascending");
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t size : sizes) {
    const Pos n = static_cast<Pos>(size);
    double total_ms = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      const Word s = random_word(rng, n, sigma);
      Word t;
      if (mode == "near") {
        std::vector<Symbol> v(s.symbols());
        for (int e = 0; e < edits; ++e) {
          const size_t at = rng() % v.size();
          v[at] = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sigma)) + 1;
        }
        t = Word(std::move(v), sigma);
      } else {
        t = random_word(rng, n, sigma);
      }
      const auto t0 = std::chrono::steady_clock::now();
      const auto k = max_sim_k(s, t);
      const auto t1 = std::chrono::steady_clock::now();
      (void)k;
      total_ms +=
          std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    const double mean_ms = total_ms / reps;
    const double ns_per_char = mean_ms * 1e6 / (2.0 * static_cast<double>(n));
    if (as_json) {
      json rec;
      rec["command"] = "bench";
      rec["size"] = size;
      rec["alphabet"] = sigma;
      rec["mode"] = mode;
      rec["reps"] = reps;
      rec["mean_ms"] = mean_ms;
      rec["ns_per_char"] = ns_per_char;
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << "size=" << size << " mode=" << mode << " reps=" << reps
                << " mean_ms=" << mean_ms << " ns_per_char=" << ns_per_char
                << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simon congruence toolkit: largest k with s ~k t, shortest "
               "distinguishing words, block trees, benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --tokens/--json appear after the subcommand too

  bool tokens_mode = false;
  app.add_flag("--tokens", tokens_mode,
               "treat words as whitespace-separated token sequences instead "
               "of character sequences");

  // maxk
  auto* mx = app.add_subcommand("maxk", "largest k with s ~k t");
  std::vector<std::string> mx_words;
  std::string mx_file;
  bool mx_stdin = false, mx_dist = false, mx_json = false;
  mx->add_option("words", mx_words, "the two words")->expected(0, 2);
  mx->add_option("--file", mx_file, "read the two words from a file");
  mx->add_flag("--stdin", mx_stdin, "read the two words from stdin");
  mx->add_flag("--distinguish", mx_dist,
               "also print a shortest distinguishing word");
  mx->add_flag("--json", mx_json, "one JSON record on stdout");

  // check
  auto* ck = app.add_subcommand("check", "decide whether s ~k t");
  std::vector<std::string> ck_words;
  std::string ck_file;
  bool ck_stdin = false, ck_json = false;
  std::int64_t ck_k = 0;
  ck->add_option("-k,--level", ck_k, "congruence level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ck->add_option("words", ck_words, "the two words")->expected(0, 2);
  ck->add_option("--file", ck_file, "read the two words from a file");
  ck->add_flag("--stdin", ck_stdin, "read the two words from stdin");
  ck->add_flag("--json", ck_json, "one JSON record on stdout");

  // tree
  auto* tr = app.add_subcommand("tree", "block tree of one word as DOT");
  std::vector<std::string> tr_words;
  std::string tr_file;
  bool tr_stdin = false, tr_transform = false;
  tr->add_option("word", tr_words, "the word")->expected(0, 1);
  tr->add_option("--file", tr_file, "read the word from a file");
  tr->add_flag("--stdin", tr_stdin, "read the word from stdin");
  tr->add_flag("--transform", tr_transform,
               "duplicate singleton leaves one level down before export");

  // bench
  auto* be = app.add_subcommand("bench", "timing on random pairs");
  std::vector<std::uint64_t> be_sizes = {100000, 1000000};
  std::int64_t be_sigma = 26;
  int be_reps = 3, be_edits = 4;
  std::uint64_t be_seed = 42;
  std::string be_mode = "near";
  bool be_json = false;
  be->add_option("--sizes", be_sizes, "word lengths, strictly ascending")
      ->check(CLI::PositiveNumber);
  be->add_option("--alphabet", be_sigma, "alphabet size")
      ->check(CLI::PositiveNumber);
  be->add_option("--reps", be_reps, "repetitions per size")
      ->check(CLI::PositiveNumber);
  be->add_option("--seed", be_seed, "corpus seed");
  be->add_option("--mode", be_mode, "pair generator")
      ->check(CLI::IsMember({"uniform", "near"}));
  be->add_option("--edits", be_edits,
                 "random substitutions in near mode")
      ->check(CLI::NonNegativeNumber);
  be->add_flag("--json", be_json, "one JSON record per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mx->parsed()) {
      return cmd_maxk(load_pair(mx_words, mx_file, mx_stdin, tokens_mode),
                      tokens_mode, mx_dist, mx_json);
    }
    if (ck->parsed()) {
      return cmd_check(load_pair(ck_words, ck_file, ck_stdin, tokens_mode),
                       static_cast<Pos>(ck_k), ck_json);
    }
    if (tr->parsed()) {
      return cmd_tree(tr_words, tr_file, tr_stdin, tokens_mode, tr_transform);
    }
    return cmd_bench(be_sizes, static_cast<Symbol>(be_sigma), be_reps,
                     be_seed, be_mode, be_edits, be_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
