// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include <cctype>
#include <string>
#include <vector>

#include "ltlfrag/formula.hpp"

namespace ltlfrag {

namespace {

enum class TokKind { Ident, Bang, Amp, Pipe, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int pos = static_cast<int>(i);
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      toks.push_back({TokKind::Ident, std::string(text.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '!':
        toks.push_back({TokKind::Bang, "!", pos});
        break;
      case '&':
        toks.push_back({TokKind::Amp, "&", pos});
        break;
      case '|':
        toks.push_back({TokKind::Pipe, "|", pos});
        break;
      case '(':
        toks.push_back({TokKind::LParen, "(", pos});
        break;
      case ')':
        toks.push_back({TokKind::RParen, ")", pos});
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    ++i;
  }
  toks.push_back({TokKind::End, "", static_cast<int>(text.size())});
  return toks;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const Alphabet& alphabet)
      : toks_(std::move(toks)), alphabet_(alphabet) {}

  Formula run() {
    Formula f = parse_or();
    if (peek().kind != TokKind::End)
      throw ParseError("trailing input '" + peek().text + "'", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  bool at_ident(const char* word) const {
    return peek().kind == TokKind::Ident && peek().text == word;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == TokKind::Pipe) {
      take();
      f = Formula::Or(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (peek().kind == TokKind::Amp) {
      take();
      f = Formula::And(f, parse_until());
    }
    return f;
  }

  Formula parse_until() {
    Formula f = parse_unary();
    if (at_ident("U")) {
      take();
      return Formula::Until(f, parse_until());
    }
    if (at_ident("R")) {
      take();
      return Formula::Release(f, parse_until());
    }
    return f;
  }

  Formula parse_unary() {
    if (peek().kind == TokKind::Bang) {
      take();
      return Formula::Not(parse_unary());
    }
    if (at_ident("X")) {
      take();
      return Formula::Next(parse_unary());
    }
    if (at_ident("F")) {
      take();
      return Formula::Eventually(parse_unary());
    }
    if (at_ident("G")) {
      take();
      return Formula::Always(parse_unary());
    }
    if (at_ident("SF")) {
      take();
      return Formula::Next(Formula::Eventually(parse_unary()));
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (peek().kind == TokKind::LParen) {
      take();
      Formula f = parse_or();
      if (peek().kind != TokKind::RParen)
        throw ParseError("expected ')'", peek().pos);
      take();
      return f;
    }
    if (peek().kind == TokKind::Ident) {
      Token t = take();
      int idx = alphabet_.index(t.text);
      if (idx < 0)
        throw ParseError("letter '" + t.text + "' not in alphabet", t.pos);
      return Formula::Letter(alphabet_, idx);
    }
    if (peek().kind == TokKind::End)
      throw ParseError("unexpected end of input", peek().pos);
    throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
  }

  std::vector<Token> toks_;
  const Alphabet& alphabet_;
  size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Alphabet& alphabet) {
  return Parser(tokenize(text), alphabet).run();
}

}  // namespace ltlfrag
