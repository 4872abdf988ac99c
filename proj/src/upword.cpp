// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/upword.hpp"

#include <algorithm>
#include <cctype>

namespace ltlfrag {

UPWord::UPWord(Alphabet alphabet, Word stem, Word loop)
    : alphabet_(std::move(alphabet)), stem_(std::move(stem)),
      loop_(std::move(loop)) {
  if (loop_.empty()) throw Error("ultimately periodic word needs a nonempty loop");
}

UPWord UPWord::parse(const Alphabet& alphabet, std::string_view text) {
  size_t open = text.find('(');
  size_t close = text.rfind(')');
  if (open == std::string_view::npos)
    throw ParseError("expected '(' introducing the loop", static_cast<int>(text.size()));
  if (close == std::string_view::npos || close < open)
    throw ParseError("expected ')' closing the loop", static_cast<int>(text.size()));
  for (size_t i = close + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("trailing input after ')'", static_cast<int>(i));
  Word stem = parse_word(alphabet, text.substr(0, open));
  Word loop = parse_word(alphabet, text.substr(open + 1, close - open - 1));
  if (loop.empty())
    throw ParseError("loop must not be empty", static_cast<int>(open + 1));
  return UPWord(alphabet, std::move(stem), std::move(loop));
}

int UPWord::at(long long pos) const {
  if (pos < 0) throw Error("negative word position");
  long long n = static_cast<long long>(stem_.size());
  if (pos < n) return stem_[static_cast<size_t>(pos)];
  return loop_[static_cast<size_t>((pos - n) % loop_.size())];
}

UPWord UPWord::canonical() const {
  Word y = loop_;
  int n = static_cast<int>(y.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (int i = p; i < n && repeats; ++i) repeats = y[i] == y[i - p];
    if (repeats) {
      y.resize(p);
      break;
    }
  }
  Word x = stem_;
  while (!x.empty() && x.back() == y.back()) {
    x.pop_back();
    std::rotate(y.begin(), y.end() - 1, y.end());
  }
  return UPWord(alphabet_, std::move(x), std::move(y));
}

bool UPWord::same_word(const UPWord& other) const {
  if (!(alphabet_ == other.alphabet_)) return false;
  UPWord a = canonical();
  UPWord b = other.canonical();
  return a.stem_ == b.stem_ && a.loop_ == b.loop_;
}

bool UPWord::operator==(const UPWord& other) const {
  return same_word(other);
}

std::string UPWord::str() const {
  return word_str(alphabet_, stem_) + "(" + word_str(alphabet_, loop_) + ")";
}

namespace {

Word collapse(const Word& w) {
  Word out;
  for (int a : w)
    if (out.empty() || out.back() != a) out.push_back(a);
  return out;
}

}  // namespace

UPWord destutter(const UPWord& w) {
  UPWord c = w.canonical();
  const Word& x = c.stem();
  const Word& y = c.loop();
  if (y.size() == 1) {
    Word z = x;
    z.push_back(y[0]);
    z = collapse(z);
    z.pop_back();
    return UPWord(c.alphabet(), std::move(z), y);
  }
  int boundary = 0;
  for (int i = 1; i < static_cast<int>(y.size()); ++i) {
    if (y[i] != y[i - 1]) {
      boundary = i;
      break;
    }
  }
  Word x2 = x;
  x2.insert(x2.end(), y.begin(), y.begin() + boundary);
  Word y2(y.begin() + boundary, y.end());
  y2.insert(y2.end(), y.begin(), y.begin() + boundary);
  Word s = collapse(x2);
  Word d = collapse(y2);
  if (!s.empty() && s.back() == d.front()) s.pop_back();
  return UPWord(c.alphabet(), std::move(s), std::move(d)).canonical();
}

bool stutter_equivalent(const UPWord& a, const UPWord& b) {
  UPWord da = destutter(a);
  UPWord db = destutter(b);
  return da.same_word(db);
}

std::vector<UPWord> enumerate_upwords(const Alphabet& alphabet, int max_stem,
                                      int max_loop) {
  std::vector<UPWord> out;
  int k = alphabet.size();
  auto words_of_length = [&](int len) {
    std::vector<Word> ws;
    Word w(len, 0);
    while (true) {
      ws.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[i] == k - 1) {
        w[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++w[i];
    }
    return ws;
  };
  for (int ls = 0; ls <= max_stem; ++ls) {
    auto stems = words_of_length(ls);
    for (int ll = 1; ll <= max_loop; ++ll) {
      auto loops = words_of_length(ll);
      for (const auto& stem : stems) {
        for (const auto& loop : loops) {
          UPWord w(alphabet, stem, loop);
          UPWord c = w.canonical();
          if (c.stem() == stem && c.loop() == loop) out.push_back(std::move(w));
        }
      }
    }
  }
  return out;
}

}  // namespace ltlfrag
