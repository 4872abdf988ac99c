// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltlfrag {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a formula, word, or fragment spec; position is a
// 0-based byte offset into the offending text, or -1 if not applicable.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int position = -1)
      : Error(what), position_(position) {}
  int position() const { return position_; }

private:
  int position_;
};

// A configured size guard was exceeded.
class LimitError : public Error {
public:
  using Error::Error;
};

// Finite ordered set of distinct letters. Letters are nonempty tokens of
// [A-Za-z0-9_] characters; the declaration order is fixed and used for
// every canonical ordering in the library.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  // Parses a comma-separated letter list such as "a,b" or "p0, p1".
  static Alphabet parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter(int i) const { return letters_.at(i); }
  // Index of a letter, or -1 if it is not in the alphabet.
  int index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name) >= 0; }
  bool single_char() const;

  const std::vector<std::string>& letters() const { return letters_; }
  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> letters_;
};

// A finite word as a sequence of letter indices.
using Word = std::vector<int>;

// Parses a finite word over the alphabet. When every letter is a single
// character the letters may be run together ("abba"); otherwise they are
// separated by spaces or commas. The empty string is the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

// Renders a word; single-character alphabets concatenate, others join
// with spaces. The empty word renders as "".
std::string word_str(const Alphabet& alphabet, const Word& w);

}  // namespace ltlfrag
