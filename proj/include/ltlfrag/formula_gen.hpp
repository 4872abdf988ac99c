// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <random>

#include "ltlfrag/formula.hpp"

namespace ltlfrag {

// Random formula over the alphabet with at most max_temporal temporal
// operators; deterministic for a given generator state.
Formula random_formula(std::mt19937_64& rng, const Alphabet& alphabet,
                       int max_temporal);

// Random formula drawn from the syntax of the given fragment: letters,
// And, Or, plus the fragment's temporal operators (negation-free). For
// Fragment::Full the whole NNF syntax is used.
Formula random_fragment_formula(std::mt19937_64& rng, const Alphabet& alphabet,
                                Fragment fragment, int max_temporal);

}  // namespace ltlfrag
