// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/formula.hpp"

namespace ltlfrag {

namespace {

// The complement of a letter as a disjunction of the other letters,
// right-folded in alphabet order.
Formula other_letters(const Alphabet& alphabet, int letter) {
  if (alphabet.size() < 2)
    throw Error("cannot negate letter '" + alphabet.letter(letter) +
                "' over a one-letter alphabet");
  Formula out;
  for (int i = alphabet.size() - 1; i >= 0; --i) {
    if (i == letter) continue;
    Formula l = Formula::Letter(alphabet, i);
    out = out.valid() ? Formula::Or(l, out) : l;
  }
  return out;
}

Formula push(const Formula& f, bool negated) {
  switch (f.kind()) {
    case FormulaKind::Letter:
      return negated ? other_letters(f.alphabet(), f.letter()) : f;
    case FormulaKind::Not:
      return push(f.left(), !negated);
    case FormulaKind::And:
      return negated ? Formula::Or(push(f.left(), true), push(f.right(), true))
                     : Formula::And(push(f.left(), false),
                                    push(f.right(), false));
    case FormulaKind::Or:
      return negated ? Formula::And(push(f.left(), true), push(f.right(), true))
                     : Formula::Or(push(f.left(), false),
                                   push(f.right(), false));
    case FormulaKind::Next:
      return Formula::Next(push(f.left(), negated));
    case FormulaKind::Eventually:
      return negated ? Formula::Always(push(f.left(), true))
                     : Formula::Eventually(push(f.left(), false));
    case FormulaKind::Always:
      return negated ? Formula::Eventually(push(f.left(), true))
                     : Formula::Always(push(f.left(), false));
    case FormulaKind::Until:
      return negated ? Formula::Release(push(f.left(), true),
                                        push(f.right(), true))
                     : Formula::Until(push(f.left(), false),
                                      push(f.right(), false));
    case FormulaKind::Release:
      return negated ? Formula::Until(push(f.left(), true),
                                      push(f.right(), true))
                     : Formula::Release(push(f.left(), false),
                                        push(f.right(), false));
  }
  throw Error("corrupt formula node");
}

}  // namespace

Formula to_nnf(const Formula& f) {
  if (!f.valid()) throw Error("operation on an empty formula handle");
  return push(f, false);
}

}  // namespace ltlfrag
