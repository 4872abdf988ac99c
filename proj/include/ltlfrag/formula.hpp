// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ltlfrag/alphabet.hpp"

namespace ltlfrag {

enum class FormulaKind {
  Letter,
  Not,
  And,
  Or,
  Next,
  Eventually,
  Always,
  Until,
  Release,
};

// Immutable formula handle over a shared syntax tree. Letters are indices
// into the alphabet carried by the handle; all combinators require their
// arguments to share one alphabet.
class Formula {
public:
  Formula() = default;

  static Formula Letter(const Alphabet& alphabet, int letter);
  static Formula Letter(const Alphabet& alphabet, std::string_view name);
  static Formula Not(const Formula& f);
  static Formula And(const Formula& f, const Formula& g);
  static Formula Or(const Formula& f, const Formula& g);
  static Formula Next(const Formula& f);
  static Formula Eventually(const Formula& f);
  static Formula Always(const Formula& f);
  static Formula Until(const Formula& f, const Formula& g);
  static Formula Release(const Formula& f, const Formula& g);

  bool valid() const { return node_ != nullptr; }
  FormulaKind kind() const;
  // Letter index; only meaningful for Letter nodes.
  int letter() const;
  // First child (unary operand or left operand).
  Formula left() const;
  // Second child of a binary node.
  Formula right() const;
  const Alphabet& alphabet() const { return alphabet_; }

  bool is_unary() const;
  bool is_binary() const;
  bool is_temporal() const;

  // Structural equality.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Deterministic structural order (used for canonical subformula order).
  bool before(const Formula& other) const;

  // Fully parenthesized canonical text, e.g. "(a U (X b))".
  std::string str() const;
  // Number of temporal operators (Next, Eventually, Always, Until, Release).
  int temporal_count() const;
  int size() const;

private:
  struct Node;
  Formula(std::shared_ptr<const Node> node, Alphabet alphabet);

  std::shared_ptr<const Node> node_;
  Alphabet alphabet_;
};

// All distinct subformulas in post order (children before parents), with
// the structural order breaking ties between unrelated subtrees.
std::vector<Formula> subformulas(const Formula& f);

// Parses the grammar: letters are identifier tokens; unary operators
// ! X F G (and the two-token SF, read as X F) bind tighter than binary
// ones; U and R are right-associative and bind tighter than &, which
// binds tighter than |; parentheses group.
Formula parse(std::string_view text, const Alphabet& alphabet);

// Negation normal form: no Not nodes remain. A negated letter becomes the
// disjunction of the other letters, so a one-letter alphabet cannot
// express it and raises an Error.
Formula to_nnf(const Formula& f);

// Canonical fragment identifiers and the operator sets denoting them.
enum class Fragment { X, F, SF, XF, U, Full };

std::string fragment_name(Fragment f);

// Normalizes a user-supplied operator set to a canonical fragment.
// Accepted operator names: X/Next, F/Eventually, SF, U/Until. Sets
// containing both X and U denote full LTL; {SF,U} and {F,SF,U} are
// rejected as unsupported; the empty set is invalid.
Fragment normalize_operator_set(const std::set<std::string>& ops);

// Parses a comma-separated operator list ("X,F") into a Fragment, or one
// of the canonical names directly ("XF", "full").
Fragment parse_fragment(std::string_view text);

}  // namespace ltlfrag
