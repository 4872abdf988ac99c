// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include "ltlfrag/formula.hpp"
#include "ltlfrag/upword.hpp"

namespace ltlfrag {

// Whether x y^omega satisfies the formula. Works directly on the lasso:
// each subformula is evaluated at the |x|+|y| distinct positions, with
// fixpoint iteration on the loop for U, R, F, and G. Handles Not nodes,
// so it applies to formulas before and after to_nnf.
bool eval(const Formula& f, const UPWord& w);

}  // namespace ltlfrag
