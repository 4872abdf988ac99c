// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "ltlfrag/alphabet.hpp"

namespace ltlfrag {

// Ultimately periodic word x y^omega, stored as given. The canonical form
// (primitive loop, shortest stem) is computed on demand; two UPWords
// denote the same omega-word exactly when their canonical forms are
// componentwise equal.
class UPWord {
public:
  UPWord() = default;
  // Requires a nonempty loop.
  UPWord(Alphabet alphabet, Word stem, Word loop);

  // Parses "stem(loop)", e.g. "ab(b)"; the stem may be empty: "(ab)".
  static UPWord parse(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& stem() const { return stem_; }
  const Word& loop() const { return loop_; }

  // Letter at position pos of x y^omega.
  int at(long long pos) const;
  // Number of distinct positions (|x| + |y|); positions at or past the
  // stem wrap into the loop.
  int period_positions() const { return static_cast<int>(stem_.size() + loop_.size()); }

  UPWord canonical() const;
  // Same omega-word (compares canonical forms).
  bool same_word(const UPWord& other) const;
  bool operator==(const UPWord& other) const;

  std::string str() const;

private:
  Alphabet alphabet_;
  Word stem_;
  Word loop_;
};

// Removes immediate letter repetitions from x y^omega and returns a
// canonical representative of the destuttered word; two UPWords are
// stutter equivalent exactly when these agree.
UPWord destutter(const UPWord& w);

bool stutter_equivalent(const UPWord& a, const UPWord& b);

// All canonical UPWords with |stem| <= max_stem and |loop| <= max_loop,
// in a fixed deterministic order, without duplicates.
std::vector<UPWord> enumerate_upwords(const Alphabet& alphabet, int max_stem,
                                      int max_loop);

}  // namespace ltlfrag
