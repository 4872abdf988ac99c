// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ltlfrag/eval.hpp"
#include "ltlfrag/formula.hpp"
#include "ltlfrag/upword.hpp"

namespace ltlfrag {

// Automaton with a reverse transition function: delta maps (letter, q) to
// the unique predecessor state, so a run r on u satisfies
// r(i) = u(i) . r(i+1). A word u acts on a state last letter first:
// (uv) . q = u . (v . q). Acceptance: the unique run that visits every
// final set infinitely often starts in an initial state. In the
// transition graph, every pair (a, q) yields an edge from a . q to q.
struct Gcma {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<std::string> labels;
  // Subformula index sets, one bitset word per state; empty for
  // hand-built fixtures.
  std::vector<unsigned> state_sets;
  std::vector<Formula> subformula_order;
  std::vector<int> initial;                  // sorted state ids
  std::vector<std::vector<int>> delta;       // delta[letter][state]
  std::vector<std::vector<int>> final_sets;  // each sorted

  bool is_initial(int q) const;
  int apply(int letter, int q) const { return delta[letter][q]; }
  // u . q, applied last letter first.
  int apply_word(const Word& u, int q) const;
};

// Tableau construction for an NNF formula: states are the subsets of the
// formula's subformula set, delta is the closure rule table, the initial
// states are the sets containing the formula, and there is one final set
// per F/G/U/R subformula. Raises LimitError when the formula has more
// than max_sub subformulas.
Gcma build_gcma(const Formula& nnf_formula, int max_sub = 16);

// Keeps exactly the states that occur in some final run: those with a
// transition-graph path to an SCC that has an edge and meets every final
// set. delta stays total on the result. The language is empty exactly
// when no initial state survives.
Gcma trim(const Gcma& a);

bool language_empty(const Gcma& a);

// States q at which u is a loop: u . q = q and every final set is visited
// by the suffix states w . q. A trim automaton has exactly one such state
// per nonempty word.
std::vector<int> loop_states(const Gcma& a, const Word& u);

// The unique loop state of u; raises Error when zero or several states
// qualify, which signals a broken automaton.
int anchor(const Gcma& a, const Word& u);

// Memoizing anchor cache for one automaton.
class AnchorTable {
public:
  explicit AnchorTable(const Gcma& a) : a_(a) {}
  int anchor(const Word& u);

private:
  const Gcma& a_;
  std::map<Word, int> memo_;
};

// Membership of x y^omega: the run of the canonical form starts at
// x . anchor(y); accept when that state is initial. False for the empty
// language.
bool accepts(const Gcma& a, const UPWord& w);

// First n+1 states r(0..n) of the unique final run on w.
std::vector<int> final_run_prefix(const Gcma& a, const UPWord& w, int n);

// Fixed 4-state fixture over {a,b} recognizing words with finitely many
// a's; used by regression tests and selftest.
Gcma figure_fixture();

}  // namespace ltlfrag
