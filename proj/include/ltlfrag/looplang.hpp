// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>

#include "ltlfrag/quotient.hpp"

namespace ltlfrag {

// Complete deterministic automaton over letter indices.
struct Dfa {
  int num_letters = 0;
  int num_states = 0;
  int start = 0;
  std::vector<std::vector<int>> delta;  // delta[letter][state]
  std::vector<char> accepting;

  int step(int letter, int s) const { return delta[letter][s]; }
  int run(const Word& w) const;
  bool accepts_word(const Word& w) const;
};

// DFA for the loop words of state q, read reversed: it accepts the
// reversal of u exactly when u . q = q and the suffix states of u visit
// every final set. Loop words are nonempty; the start state's accepting
// flag is not meaningful.
Dfa loop_dfa(const Gcma& a, int q);

// Union of the loop DFAs over all states of a class, read reversed:
// a synchronous accept-any product restricted to reachable tuples.
// Raises LimitError when the product exceeds 100000 states.
Dfa loop_language(const Gcma& a, const Partition& p, int class_id);

// A word pair u a v / u a a v whose anchors fall into different classes.
struct StutterCounterexample {
  Word u;
  int letter = -1;
  Word v;
};

// A word pair u a b v / u b a v whose anchors fall into different
// classes.
struct SwapCounterexample {
  Word u;
  int a = -1;
  int b = -1;
  Word v;
};

// Searches all ordered pairs of distinct classes for words u a v and
// u a a v with anchors in the two classes; returns the shortest
// counterexample or nothing when duplicating a letter never moves the
// anchor class.
std::optional<StutterCounterexample> check_stutter_closure(const Gcma& a,
                                                           const Partition& p);

// Likewise for swapping two adjacent letters. With strict = false (the
// default used by the decider), a pair with empty u only counts as a
// violation when the two anchors also disagree on some nonempty
// continuation: the two words then start with different letters, and a
// difference that is visible only at the empty context does not separate
// them. strict = true reports those pairs too.
std::optional<SwapCounterexample> check_swap_closure(const Gcma& a,
                                                     const Partition& p,
                                                     bool strict = false);

struct TestabilityReport {
  bool one_lt = false;
  std::optional<StutterCounterexample> stutter;
  std::optional<SwapCounterexample> swap;
};

// Whether the class of the anchor of a word depends only on its
// occurrence set (with the empty-prefix allowance described at
// check_swap_closure): clean stutter and swap closure.
TestabilityReport is_one_locally_testable(const Gcma& a, const Partition& p);

// Whether the loop language of the class is locally testable: the
// transition semigroup of its minimal DFA is locally idempotent and
// locally commutative. Raises LimitError when the semigroup exceeds
// max_semigroup elements.
bool is_locally_testable(const Gcma& a, const Partition& p, int class_id,
                         int max_semigroup = 20000);

// Hopcroft-style reachability plus Moore merging; the result is the
// minimal complete DFA of the same language.
Dfa minimize(const Dfa& d);

// Transition semigroup of a DFA: all distinct state maps of nonempty
// words, generated from the letter maps.
struct Semigroup {
  int size = 0;
  // element id -> state map
  std::vector<std::vector<int>> maps;
  // element ids of the letter maps
  std::vector<int> letter_element;
  // composition table: product[i][j] = element of "i then j"
  std::vector<std::vector<int>> product;

  bool idempotent(int e) const { return product[e][e] == e; }
};

Semigroup transition_semigroup(const Dfa& d, int max_size = 20000);

// Local testability of the language of a DFA (minimized internally).
bool dfa_locally_testable(const Dfa& d, int max_semigroup = 20000);

// The language is closed under duplicating letters: every letter map of
// the minimal DFA is idempotent.
bool dfa_stutter_invariant(const Dfa& d, int max_semigroup = 20000);

// Membership depends only on the set of letters occurring: the
// transition semigroup of the minimal DFA is idempotent and commutative.
bool dfa_occurrence_determined(const Dfa& d, int max_semigroup = 20000);

}  // namespace ltlfrag
