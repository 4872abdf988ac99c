// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/eval.hpp"

#include <vector>

#include "ltlfrag/formula.hpp"

namespace ltlfrag {

namespace {

// Positions 0..|x|+|y|-1 of the word x y^omega; the successor of the last
// position wraps to the start of the loop. A fixpoint pass over the loop
// stabilizes within |y|+1 rounds, after which the stem is filled backward.
class Evaluator {
public:
  Evaluator(const Formula& f, const UPWord& w) : word_(w) {
    stem_ = static_cast<int>(w.stem().size());
    total_ = w.period_positions();
    subs_ = subformulas(f);
    vals_.resize(subs_.size());
    for (size_t i = 0; i < subs_.size(); ++i) vals_[i] = table(subs_[i]);
  }

  bool value(const Formula& f, int pos) const { return vals_[index(f)][pos]; }

private:
  int succ(int p) const { return p + 1 < total_ ? p + 1 : stem_; }

  size_t index(const Formula& f) const {
    for (size_t i = 0; i < subs_.size(); ++i)
      if (subs_[i] == f) return i;
    throw Error("subformula missing from evaluation table");
  }

  std::vector<char> table(const Formula& f) {
    std::vector<char> v(total_, 0);
    switch (f.kind()) {
      case FormulaKind::Letter:
        for (int p = 0; p < total_; ++p) v[p] = word_.at(p) == f.letter();
        return v;
      case FormulaKind::Not: {
        const auto& c = vals_[index(f.left())];
        for (int p = 0; p < total_; ++p) v[p] = !c[p];
        return v;
      }
      case FormulaKind::And: {
        const auto& a = vals_[index(f.left())];
        const auto& b = vals_[index(f.right())];
        for (int p = 0; p < total_; ++p) v[p] = a[p] && b[p];
        return v;
      }
      case FormulaKind::Or: {
        const auto& a = vals_[index(f.left())];
        const auto& b = vals_[index(f.right())];
        for (int p = 0; p < total_; ++p) v[p] = a[p] || b[p];
        return v;
      }
      case FormulaKind::Next: {
        const auto& c = vals_[index(f.left())];
        for (int p = 0; p < total_; ++p) v[p] = c[succ(p)];
        return v;
      }
      case FormulaKind::Eventually: {
        const auto& c = vals_[index(f.left())];
        char on_loop = 0;
        for (int p = stem_; p < total_; ++p) on_loop |= c[p];
        for (int p = stem_; p < total_; ++p) v[p] = on_loop;
        for (int p = stem_ - 1; p >= 0; --p) v[p] = c[p] || v[p + 1];
        return v;
      }
      case FormulaKind::Always: {
        const auto& c = vals_[index(f.left())];
        char on_loop = 1;
        for (int p = stem_; p < total_; ++p) on_loop &= c[p];
        for (int p = stem_; p < total_; ++p) v[p] = on_loop;
        for (int p = stem_ - 1; p >= 0; --p) v[p] = c[p] && v[p + 1];
        return v;
      }
      case FormulaKind::Until: {
        const auto& a = vals_[index(f.left())];
        const auto& b = vals_[index(f.right())];
        int rounds = total_ - stem_ + 1;
        for (int r = 0; r < rounds; ++r)
          for (int p = total_ - 1; p >= stem_; --p)
            v[p] = b[p] || (a[p] && v[succ(p)]);
        for (int p = stem_ - 1; p >= 0; --p)
          v[p] = b[p] || (a[p] && v[p + 1]);
        return v;
      }
      case FormulaKind::Release: {
        const auto& a = vals_[index(f.left())];
        const auto& b = vals_[index(f.right())];
        for (int p = stem_; p < total_; ++p) v[p] = 1;
        int rounds = total_ - stem_ + 1;
        for (int r = 0; r < rounds; ++r)
          for (int p = total_ - 1; p >= stem_; --p)
            v[p] = b[p] && (a[p] || v[succ(p)]);
        for (int p = stem_ - 1; p >= 0; --p)
          v[p] = b[p] && (a[p] || v[p + 1]);
        return v;
      }
    }
    throw Error("corrupt formula node");
  }

  const UPWord& word_;
  int stem_ = 0;
  int total_ = 0;
  std::vector<Formula> subs_;
  std::vector<std::vector<char>> vals_;
};

}  // namespace

bool eval(const Formula& f, const UPWord& w) {
  if (!f.valid()) throw Error("operation on an empty formula handle");
  if (!(f.alphabet() == w.alphabet()))
    throw Error("formula and word use different alphabets");
  return Evaluator(f, w).value(f, 0);
}

}  // namespace ltlfrag
