// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlfrag/patterns.hpp"
#include "ltlfrag/upword.hpp"

namespace ltlfrag {

// Round types available to Spoiler. X advances both words one letter; F
// drops an arbitrary finite prefix (possibly empty) on a side of
// Spoiler's choice, answered on the other side; SF is the same with a
// nonempty prefix.
struct GameOperators {
  bool has_x = false;
  bool has_f = false;
  bool has_sf = false;

  static GameOperators parse(std::string_view text);
  // Operators of the game matching a fragment row (U has no game).
  static std::optional<GameOperators> for_fragment(Fragment f);
  std::string str() const;
};

// One round of a played-out game, for diagnostics.
struct GameMove {
  char op = 'X';     // 'X', 'F', or 'S' (strict F)
  int side = 0;      // 1 or 2, the side Spoiler moved on; 0 for X rounds
  int pos1 = 0;      // positions after the round (canonical lasso indices)
  int pos2 = 0;
};

// Exact game value: whether Spoiler wins the k-round game on the two
// words. Positions are canonicalized into the lassos, so the state space
// is finite and the value is computed by backward induction over the
// remaining-round count.
bool spoiler_wins(const UPWord& u, const UPWord& v, GameOperators ops, int k);

// Winning play reconstruction for the CLI: present exactly when Spoiler
// wins, listing one optimal move sequence.
std::vector<GameMove> spoiler_strategy(const UPWord& u, const UPWord& v,
                                       GameOperators ops, int k);

// Duplicator survives k rounds on the witness words.
bool certify_indistinguishable(const WitnessPair& pair, GameOperators ops,
                               int k);

}  // namespace ltlfrag
