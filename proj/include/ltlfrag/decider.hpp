// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlfrag/efgame.hpp"
#include "ltlfrag/looplang.hpp"
#include "ltlfrag/patterns.hpp"

namespace ltlfrag {

struct DecideOptions {
  int max_sub = 16;
  int max_semigroup = 20000;
  int game_depth = 6;
  int pump = 8;
  bool all_reasons = false;
  bool want_witness = true;
};

// One failed condition of a fragment row.
struct Reason {
  std::string kind;    // "T1".."T4", "stutter-closure", "swap-closure",
                       // "local-testability"
  std::string detail;
  std::optional<PatternHit> hit;
};

struct VerdictStats {
  int states = 0;
  int classes = 0;
  int final_sets = 0;
};

// Outcome of one fragment check. expressible holds exactly when reasons
// is empty; notes carry informational messages (empty language,
// automatically satisfied preconditions).
struct Verdict {
  Fragment fragment = Fragment::X;
  bool expressible = false;
  std::vector<Reason> reasons;
  std::vector<std::string> notes;
  std::optional<WitnessPair> witness;
  VerdictStats stats;
};

// Shared pipeline state: the trimmed automaton, congruence, and quotient
// of one formula, reusable across fragment rows.
struct Analysis {
  Formula nnf;
  Gcma automaton;
  Partition partition;
  QuotientAutomaton quot;
  bool empty_language = false;
};

Analysis analyze(const Formula& f, const DecideOptions& opts = {});

// Decides one fragment row:
//   X:  no T1.
//   F:  no T2, no T3, anchors occurrence-determined.
//   SF: no T2, anchors occurrence-determined.
//   XF: no T4, every loop language locally testable.
//   U:  no T3, stutter-closed anchors.
// Full is expressible by construction. The empty language is expressible
// in every fragment.
Verdict decide(const Formula& f, Fragment fragment,
               const DecideOptions& opts = {});

Verdict decide(const Analysis& an, Fragment fragment,
               const DecideOptions& opts = {});

// All five rows. Raises Error when the results violate the containment
// order of the fragments (F inside SF, U, XF; SF and X inside XF).
std::map<Fragment, Verdict> decide_all(const Formula& f,
                                       const DecideOptions& opts = {});

}  // namespace ltlfrag
