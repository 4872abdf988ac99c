// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>

#include "ltlfrag/quotient.hpp"

namespace ltlfrag {

enum class PatternId { T1, T2, T3, T4 };

std::string pattern_name(PatternId id);

// A structural pattern found in the quotient transition graph. The
// populated fields depend on the pattern:
//   T1: classes p, q and a word x with x o p = p, x o q = q, p != q.
//   T2: classes r, s in one SCC and a letter with different images;
//       p = letter o r, q = letter o s, x and y connect r = x o s and
//       s = y o r.
//   T3: class r and a letter with letter o (letter o r) != letter o r;
//       q = letter o r, p = letter o q.
//   T4: as T1 with p, q additionally in one SCC; z is the common loop
//       word and x, y the connecting words p = x o q, q = y o p.
struct PatternHit {
  PatternId id;
  int p = -1;
  int q = -1;
  int r = -1;
  int s = -1;
  int letter = -1;
  Word x;
  Word y;
  Word z;
};

std::optional<PatternHit> find_t1(const QuotientAutomaton& q);
std::optional<PatternHit> find_t2(const QuotientAutomaton& q);
std::optional<PatternHit> find_t3(const QuotientAutomaton& q);
std::optional<PatternHit> find_t4(const QuotientAutomaton& q);

enum class WitnessRelation {
  PrefixEqual,        // equal prefixes of length >= pump
  StutterEquivalent,  // differ by duplicating one letter
  OccEqualPumped,     // equal occurrence sets, pumped repetitions
  XfPumped,           // pumped block family for the X+F row
};

std::string witness_relation_name(WitnessRelation r);

// Pair of ultimately periodic words with different membership whose
// difference the indicated relation bounds.
struct WitnessPair {
  UPWord w1;
  UPWord w2;
  WitnessRelation relation;
  int pump = 0;
};

// Builds a witness pair for a pattern hit on the quotient of a. Every
// intermediate step is validated on the automaton itself; the result
// satisfies accepts(a, w1) != accepts(a, w2). The pump parameter is the
// requested repetition count and is raised internally when a
// construction needs more.
WitnessPair witness(const Gcma& a, const QuotientAutomaton& q,
                    const PatternHit& hit, int pump);

}  // namespace ltlfrag
