#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "simonk/maxsimk.hpp"
#include "simonk/simon_tree.hpp"
#include "simonk/word.hpp"

namespace py = pybind11;
using namespace simonk;

namespace {

NormalizedPair parse_pair(const std::string& s, const std::string& t,
                          bool tokens) {
  if (tokens) return normalize(split_tokens(s), split_tokens(t));
  return normalize_chars(s, t);
}

std::string render(const std::vector<Symbol>& syms,
                   const AlphabetMap& alphabet, bool tokens) {
  std::string out;
  for (size_t i = 0; i < syms.size(); ++i) {
    if (tokens && i > 0) out.push_back(' ');
    out += alphabet.token(syms[i]);
  }
  return out;
}

py::object py_max_sim_k(const std::string& s, const std::string& t,
                        bool tokens) {
  const NormalizedPair np = parse_pair(s, t, tokens);
  const auto k = max_sim_k(np.s, np.t);
  if (!k) return py::none();
  return py::int_(*k);
}

bool py_sim_k(const std::string& s, const std::string& t, Pos k, bool tokens) {
  const NormalizedPair np = parse_pair(s, t, tokens);
  return sim_k(np.s, np.t, k);
}

std::string py_distinguishing_word(const std::string& s, const std::string& t,
                                   bool tokens) {
  const NormalizedPair np = parse_pair(s, t, tokens);
  return render(distinguishing_word(np.s, np.t), np.alphabet, tokens);
}

py::dict py_analyze(const std::string& s, const std::string& t, bool tokens) {
  const NormalizedPair np = parse_pair(s, t, tokens);
  const Analysis a = analyze(np.s, np.t);
  py::dict out;
  out["equal"] = a.equal;
  out["max_k"] = a.equal ? py::object(py::none()) : py::int_(a.max_k);
  out["distinguisher"] =
      a.equal ? py::object(py::none())
              : py::str(render(a.distinguisher, np.alphabet, tokens));
  out["distinguisher_in"] =
      a.equal ? py::object(py::none()) : py::str(a.in_s ? "s" : "t");
  return out;
}

std::vector<std::pair<Pos, Pos>> py_k_blocks(const std::string& w,
                                             std::int32_t k, bool tokens) {
  const NormalizedPair np = parse_pair(w, "", tokens);
  if (np.s.empty()) return {};
  SimonTree tree = build_simon_tree(np.s);
  std::vector<std::pair<Pos, Pos>> out;
  for (const Interval& iv : k_blocks(tree, k)) out.push_back(iv);
  return out;
}

std::string py_tree_dot(const std::string& w, bool transform, bool tokens) {
  const NormalizedPair np = parse_pair(w, "", tokens);
  SimonTree tree = build_simon_tree(np.s);
  if (transform) transform_tree(tree);
  return export_dot(tree, np.s, np.alphabet);
}

}  // namespace

PYBIND11_MODULE(_simonk, m) {
  m.doc() =
      "Simon congruence toolkit: largest k with s ~k t, shortest "
      "distinguishing words, and block trees.";

  m.def("max_sim_k", &py_max_sim_k, py::arg("s"), py::arg("t"),
        py::arg("tokens") = false,
        "Largest k with s ~k t, or None when s == t.");
  m.def("sim_k", &py_sim_k, py::arg("s"), py::arg("t"), py::arg("k"),
        py::arg("tokens") = false, "Whether s ~k t.");
  m.def("distinguishing_word", &py_distinguishing_word, py::arg("s"),
        py::arg("t"), py::arg("tokens") = false,
        "A shortest word that embeds into exactly one of s, t; raises "
        "ValueError when s == t.");
  m.def("analyze", &py_analyze, py::arg("s"), py::arg("t"),
        py::arg("tokens") = false,
        "Dict with equal, max_k, distinguisher, distinguisher_in.");
  m.def("k_blocks", &py_k_blocks, py::arg("w"), py::arg("k"),
        py::arg("tokens") = false,
        "Level-k blocks of suffix positions as (start, end) pairs, 1-based.");
  m.def("tree_dot", &py_tree_dot, py::arg("w"), py::arg("transform") = false,
        py::arg("tokens") = false, "Block tree of w in Graphviz DOT text.");
}
