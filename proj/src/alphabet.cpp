// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ltlfrag {

namespace {

bool is_letter_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_letter(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_letter_char);
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("alphabet must not be empty");
  for (const auto& l : letters_) {
    if (!valid_letter(l))
      throw Error("invalid letter '" + l +
                  "': letters are nonempty words of [A-Za-z0-9_]");
  }
  for (size_t i = 0; i < letters_.size(); ++i)
    for (size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j])
        throw Error("duplicate letter '" + letters_[i] + "'");
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<std::string> letters;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      letters.push_back(current);
      current.clear();
    }
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  if (letters.empty()) throw ParseError("empty alphabet spec", 0);
  return Alphabet(std::move(letters));
}

int Alphabet::index(std::string_view name) const {
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Alphabet::single_char() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (alphabet.single_char()) {
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
      int idx = alphabet.index(std::string_view(&c, 1));
      if (idx < 0)
        throw ParseError(std::string("unknown letter '") + c + "' in word",
                         static_cast<int>(i));
      w.push_back(idx);
    }
    return w;
  }
  std::string current;
  size_t start = 0;
  auto flush = [&](size_t end) {
    if (current.empty()) return;
    int idx = alphabet.index(current);
    if (idx < 0)
      throw ParseError("unknown letter '" + current + "' in word",
                       static_cast<int>(end - current.size()));
    w.push_back(idx);
    current.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush(i);
      start = i + 1;
    } else {
      if (current.empty()) start = i;
      current.push_back(c);
    }
  }
  (void)start;
  flush(text.size());
  return w;
}

std::string word_str(const Alphabet& alphabet, const Word& w) {
  std::ostringstream out;
  bool concat = alphabet.single_char();
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !concat) out << ' ';
    out << alphabet.letter(w[i]);
  }
  return out.str();
}

}  // namespace ltlfrag
