// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <ostream>

namespace ltlfrag {

// Cross-checks the pipeline on randomized formulas: automaton
// acceptance against direct evaluation, congruence classes against the
// word-level definition, verdicts against game-based and bounded
// oracles. Also runs one deliberately corrupted automaton through the
// anchor check to confirm the failure is caught. Prints one line per
// suite. Returns true when every suite passes.
bool run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace ltlfrag
