// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/formula.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ltlfrag {

struct Formula::Node {
  FormulaKind kind;
  int letter = -1;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Formula::Formula(std::shared_ptr<const Node> node, Alphabet alphabet)
    : node_(std::move(node)), alphabet_(std::move(alphabet)) {}

Formula Formula::Letter(const Alphabet& alphabet, int letter) {
  if (letter < 0 || letter >= alphabet.size())
    throw Error("letter index out of range");
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Letter;
  n->letter = letter;
  return Formula(std::move(n), alphabet);
}

Formula Formula::Letter(const Alphabet& alphabet, std::string_view name) {
  int idx = alphabet.index(name);
  if (idx < 0) throw Error("letter '" + std::string(name) + "' not in alphabet");
  return Letter(alphabet, idx);
}

namespace {

void require_valid(const Formula& f) {
  if (!f.valid()) throw Error("operation on an empty formula handle");
}

void require_same_alphabet(const Formula& f, const Formula& g) {
  if (!(f.alphabet() == g.alphabet()))
    throw Error("operands use different alphabets");
}

}  // namespace

#define LTLFRAG_UNARY(NAME, KIND)                             \
  Formula Formula::NAME(const Formula& f) {                   \
    require_valid(f);                                         \
    auto n = std::make_shared<Node>();                        \
    n->kind = FormulaKind::KIND;                              \
    n->left = f.node_;                                        \
    return Formula(std::move(n), f.alphabet_);                \
  }

#define LTLFRAG_BINARY(NAME, KIND)                            \
  Formula Formula::NAME(const Formula& f, const Formula& g) { \
    require_valid(f);                                         \
    require_valid(g);                                         \
    require_same_alphabet(f, g);                              \
    auto n = std::make_shared<Node>();                        \
    n->kind = FormulaKind::KIND;                              \
    n->left = f.node_;                                        \
    n->right = g.node_;                                       \
    return Formula(std::move(n), f.alphabet_);                \
  }

LTLFRAG_UNARY(Not, Not)
LTLFRAG_UNARY(Next, Next)
LTLFRAG_UNARY(Eventually, Eventually)
LTLFRAG_UNARY(Always, Always)
LTLFRAG_BINARY(And, And)
LTLFRAG_BINARY(Or, Or)
LTLFRAG_BINARY(Until, Until)
LTLFRAG_BINARY(Release, Release)

#undef LTLFRAG_UNARY
#undef LTLFRAG_BINARY

FormulaKind Formula::kind() const {
  require_valid(*this);
  return node_->kind;
}

int Formula::letter() const {
  require_valid(*this);
  return node_->letter;
}

Formula Formula::left() const {
  require_valid(*this);
  return Formula(node_->left, alphabet_);
}

Formula Formula::right() const {
  require_valid(*this);
  return Formula(node_->right, alphabet_);
}

bool Formula::is_unary() const {
  switch (kind()) {
    case FormulaKind::Not:
    case FormulaKind::Next:
    case FormulaKind::Eventually:
    case FormulaKind::Always:
      return true;
    default:
      return false;
  }
}

bool Formula::is_binary() const {
  switch (kind()) {
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Until:
    case FormulaKind::Release:
      return true;
    default:
      return false;
  }
}

bool Formula::is_temporal() const {
  switch (kind()) {
    case FormulaKind::Next:
    case FormulaKind::Eventually:
    case FormulaKind::Always:
    case FormulaKind::Until:
    case FormulaKind::Release:
      return true;
    default:
      return false;
  }
}

namespace {

int structural_compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Letter:
      return a.letter() < b.letter() ? -1 : a.letter() > b.letter() ? 1 : 0;
    case FormulaKind::Not:
    case FormulaKind::Next:
    case FormulaKind::Eventually:
    case FormulaKind::Always:
      return structural_compare(a.left(), b.left());
    default:
      if (int c = structural_compare(a.left(), b.left()); c != 0) return c;
      return structural_compare(a.right(), b.right());
  }
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (!valid() || !other.valid()) return valid() == other.valid();
  return alphabet_ == other.alphabet_ &&
         structural_compare(*this, other) == 0;
}

bool Formula::before(const Formula& other) const {
  require_valid(*this);
  require_valid(other);
  return structural_compare(*this, other) < 0;
}

std::string Formula::str() const {
  require_valid(*this);
  std::ostringstream out;
  std::function<void(const Node*)> rec = [&](const Node* n) {
    switch (n->kind) {
      case FormulaKind::Letter:
        out << alphabet_.letter(n->letter);
        return;
      case FormulaKind::Not:
        out << "(! ";
        rec(n->left.get());
        out << ")";
        return;
      case FormulaKind::Next:
      case FormulaKind::Eventually:
      case FormulaKind::Always: {
        char op = n->kind == FormulaKind::Next        ? 'X'
                  : n->kind == FormulaKind::Eventually ? 'F'
                                                       : 'G';
        out << "(" << op << " ";
        rec(n->left.get());
        out << ")";
        return;
      }
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Until:
      case FormulaKind::Release: {
        const char* op = n->kind == FormulaKind::And     ? "&"
                         : n->kind == FormulaKind::Or    ? "|"
                         : n->kind == FormulaKind::Until ? "U"
                                                         : "R";
        out << "(";
        rec(n->left.get());
        out << " " << op << " ";
        rec(n->right.get());
        out << ")";
        return;
      }
    }
  };
  rec(node_.get());
  return out.str();
}

int Formula::temporal_count() const {
  require_valid(*this);
  int count = 0;
  std::function<void(const Node*)> rec = [&](const Node* n) {
    if (n == nullptr) return;
    switch (n->kind) {
      case FormulaKind::Next:
      case FormulaKind::Eventually:
      case FormulaKind::Always:
      case FormulaKind::Until:
      case FormulaKind::Release:
        ++count;
        break;
      default:
        break;
    }
    rec(n->left.get());
    rec(n->right.get());
  };
  rec(node_.get());
  return count;
}

int Formula::size() const {
  require_valid(*this);
  int count = 0;
  std::function<void(const Node*)> rec = [&](const Node* n) {
    if (n == nullptr) return;
    ++count;
    rec(n->left.get());
    rec(n->right.get());
  };
  rec(node_.get());
  return count;
}

std::vector<Formula> subformulas(const Formula& f) {
  require_valid(f);
  std::vector<Formula> out;
  std::function<void(const Formula&)> rec = [&](const Formula& g) {
    if (g.is_unary()) {
      rec(g.left());
    } else if (g.is_binary()) {
      rec(g.left());
      rec(g.right());
    }
    for (const auto& seen : out)
      if (seen == g) return;
    out.push_back(g);
  };
  rec(f);
  std::stable_sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.before(b);
  });
  return out;
}

std::string fragment_name(Fragment f) {
  switch (f) {
    case Fragment::X:
      return "X";
    case Fragment::F:
      return "F";
    case Fragment::SF:
      return "SF";
    case Fragment::XF:
      return "XF";
    case Fragment::U:
      return "U";
    case Fragment::Full:
      return "full";
  }
  return "?";
}

Fragment normalize_operator_set(const std::set<std::string>& ops) {
  bool has_x = false, has_f = false, has_sf = false, has_u = false;
  for (const auto& op : ops) {
    if (op == "X" || op == "Next")
      has_x = true;
    else if (op == "F" || op == "Eventually")
      has_f = true;
    else if (op == "SF")
      has_sf = true;
    else if (op == "U" || op == "Until")
      has_u = true;
    else
      throw Error("unknown operator '" + op + "' (expected X, F, SF, or U)");
  }
  if (ops.empty()) throw Error("empty operator set");
  if (has_x && has_u) return Fragment::Full;
  if (has_u && has_sf)
    throw Error("operator set mixing SF and U is not supported");
  if (has_u) return Fragment::U;
  if (has_x) return (has_f || has_sf) ? Fragment::XF : Fragment::X;
  if (has_f && !has_sf) return Fragment::F;
  return Fragment::SF;
}

Fragment parse_fragment(std::string_view text) {
  std::string t(text);
  if (t == "X") return Fragment::X;
  if (t == "F") return Fragment::F;
  if (t == "SF") return Fragment::SF;
  if (t == "XF") return Fragment::XF;
  if (t == "U") return Fragment::U;
  if (t == "full" || t == "FULL" || t == "Full") return Fragment::Full;
  std::set<std::string> ops;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      ops.insert(current);
      current.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || c == ' ')
      flush();
    else
      current.push_back(c);
  }
  flush();
  return normalize_operator_set(ops);
}

}  // namespace ltlfrag
