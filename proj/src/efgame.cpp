// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/efgame.hpp"

#include <algorithm>
#include <cctype>

namespace ltlfrag {

GameOperators GameOperators::parse(std::string_view text) {
  GameOperators ops;
  bool any = false;
  std::string token;
  auto commit = [&] {
    if (token.empty()) return;
    std::string upper;
    for (char c : token)
      upper.push_back(
          static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "X")
      ops.has_x = true;
    else if (upper == "F")
      ops.has_f = true;
    else if (upper == "SF")
      ops.has_sf = true;
    else
      throw ParseError("unknown game operator: " + token);
    any = true;
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '+' || std::isspace(static_cast<unsigned char>(c)))
      commit();
    else
      token.push_back(c);
  }
  commit();
  if (!any) throw ParseError("empty game operator list");
  return ops;
}

std::optional<GameOperators> GameOperators::for_fragment(Fragment f) {
  GameOperators ops;
  switch (f) {
    case Fragment::X:
      ops.has_x = true;
      return ops;
    case Fragment::F:
      ops.has_f = true;
      return ops;
    case Fragment::SF:
      ops.has_sf = true;
      return ops;
    case Fragment::XF:
      ops.has_x = ops.has_f = true;
      return ops;
    case Fragment::U:
    case Fragment::Full:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string GameOperators::str() const {
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += "+";
    out += name;
  };
  if (has_x) add("X");
  if (has_f) add("F");
  if (has_sf) add("SF");
  return out;
}

namespace {

// Canonical lasso positions: stem indices stay fixed, stem + i stands
// for loop offset i, and advancing past the end wraps to the loop start.
struct Lasso {
  Word letters;
  int stem = 0;
  int total = 0;

  explicit Lasso(const UPWord& w) {
    UPWord c = w.canonical();
    letters = c.stem();
    letters.insert(letters.end(), c.loop().begin(), c.loop().end());
    stem = static_cast<int>(c.stem().size());
    total = static_cast<int>(letters.size());
  }
  int next(int p) const { return p + 1 < total ? p + 1 : stem; }
};

// Backward-induction tables for one word pair. Matrices are row-major
// over position pairs with n2 columns. From a stem position the forward
// reach is the rest of the stem plus the whole loop; from a loop
// position it is the whole loop, strict or not, because every offset
// recurs.
struct Game {
  Lasso a, b;
  GameOperators ops;
  int n1, n2;
  std::vector<char> differ;

  Game(const UPWord& u, const UPWord& v, GameOperators o)
      : a(u), b(v), ops(o), n1(a.total), n2(b.total),
        differ(static_cast<size_t>(n1) * n2) {
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        differ[i * n2 + j] = a.letters[i] != b.letters[j];
  }

  // out[i][j] folds m[i][j'] over the positions j' reachable from j on
  // the second word: conjunction when all is set, else disjunction.
  std::vector<char> fold2(const std::vector<char>& m, bool strict,
                          bool all) const {
    std::vector<char> out(m.size());
    int s = b.stem;
    std::vector<char> acc(s + 1);
    for (int i = 0; i < n1; ++i) {
      const char* row = m.data() + static_cast<size_t>(i) * n2;
      char loop_acc = all ? 1 : 0;
      for (int j = s; j < n2; ++j)
        loop_acc = all ? (loop_acc && row[j]) : (loop_acc || row[j]);
      acc[s] = loop_acc;
      for (int j = s - 1; j >= 0; --j)
        acc[j] = all ? (row[j] && acc[j + 1]) : (row[j] || acc[j + 1]);
      char* dst = out.data() + static_cast<size_t>(i) * n2;
      for (int j = 0; j < n2; ++j)
        dst[j] = j >= s ? loop_acc : acc[strict ? j + 1 : j];
    }
    return out;
  }

  // The same fold over the positions reachable on the first word.
  std::vector<char> fold1(const std::vector<char>& m, bool strict,
                          bool all) const {
    std::vector<char> out(m.size());
    int s = a.stem;
    std::vector<char> acc(s + 1);
    for (int j = 0; j < n2; ++j) {
      char loop_acc = all ? 1 : 0;
      for (int i = s; i < n1; ++i)
        loop_acc = all ? (loop_acc && m[i * n2 + j]) : (loop_acc || m[i * n2 + j]);
      acc[s] = loop_acc;
      for (int i = s - 1; i >= 0; --i)
        acc[i] = all ? (m[i * n2 + j] && acc[i + 1]) : (m[i * n2 + j] || acc[i + 1]);
      for (int i = 0; i < n1; ++i)
        out[i * n2 + j] = i >= s ? loop_acc : acc[strict ? i + 1 : i];
    }
    return out;
  }

  // Value of a prefix-drop round: Spoiler picks a side and a reachable
  // position, Duplicator answers on the other side; Spoiler needs every
  // answer to land in m.
  std::vector<char> jump_value(const std::vector<char>& m, bool strict) const {
    std::vector<char> side1 = fold1(fold2(m, strict, true), strict, false);
    std::vector<char> side2 = fold2(fold1(m, strict, true), strict, false);
    for (size_t t = 0; t < side1.size(); ++t)
      side1[t] = side1[t] || side2[t];
    return side1;
  }

  // Positions Spoiler wins with one more round than the given matrix.
  std::vector<char> step(const std::vector<char>& m) const {
    std::vector<char> out = differ;
    std::vector<char> fj, sj;
    if (ops.has_f) fj = jump_value(m, false);
    if (ops.has_sf) sj = jump_value(m, true);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        size_t t = static_cast<size_t>(i) * n2 + j;
        if (out[t]) continue;
        if (ops.has_x && m[static_cast<size_t>(a.next(i)) * n2 + b.next(j)]) {
          out[t] = 1;
          continue;
        }
        if (ops.has_f && fj[t]) {
          out[t] = 1;
          continue;
        }
        if (ops.has_sf && sj[t]) out[t] = 1;
      }
    return out;
  }
};

void check_inputs(const UPWord& u, const UPWord& v, int k) {
  if (u.alphabet() != v.alphabet())
    throw Error("game words use different alphabets");
  if (k < 0) throw Error("negative round count");
}

std::vector<int> reach_positions(const Lasso& w, int p, bool strict) {
  std::vector<int> out;
  if (p < w.stem)
    for (int q = p + (strict ? 1 : 0); q < w.stem; ++q) out.push_back(q);
  for (int q = w.stem; q < w.total; ++q) out.push_back(q);
  return out;
}

}  // namespace

bool spoiler_wins(const UPWord& u, const UPWord& v, GameOperators ops, int k) {
  check_inputs(u, v, k);
  Game g(u, v, ops);
  std::vector<char> w = g.differ;
  for (int t = 1; t <= k && !w[0]; ++t) {
    std::vector<char> next = g.step(w);
    if (next == w) break;
    w = std::move(next);
  }
  return w[0] != 0;
}

std::vector<GameMove> spoiler_strategy(const UPWord& u, const UPWord& v,
                                       GameOperators ops, int k) {
  check_inputs(u, v, k);
  Game g(u, v, ops);
  std::vector<std::vector<char>> levels = {g.differ};
  for (int t = 1; t <= k; ++t) levels.push_back(g.step(levels.back()));
  // Rounds Spoiler needs from a position pair; k+1 when k is not enough.
  auto rank = [&](int i, int j) {
    for (int t = 0; t <= k; ++t)
      if (levels[t][static_cast<size_t>(i) * g.n2 + j]) return t;
    return k + 1;
  };

  std::vector<GameMove> moves;
  int ci = 0, cj = 0;
  int r = rank(0, 0);
  if (r > k) return {};
  while (r > 0) {
    GameMove mv;
    bool found = false;
    if (ops.has_x) {
      int ni = g.a.next(ci);
      int nj = g.b.next(cj);
      if (rank(ni, nj) <= r - 1) {
        mv = GameMove{'X', 0, ni, nj};
        found = true;
      }
    }
    // Jump rounds: pick the first winning Spoiler move and pair it with
    // Duplicator's most resistant answer.
    auto try_jump = [&](bool strict, char opch) {
      for (int i2 : reach_positions(g.a, ci, strict)) {
        bool all_win = true;
        int best = -1, best_rank = -1;
        for (int j2 : reach_positions(g.b, cj, strict)) {
          int rk = rank(i2, j2);
          if (rk > r - 1) {
            all_win = false;
            break;
          }
          if (rk > best_rank) {
            best_rank = rk;
            best = j2;
          }
        }
        if (all_win) {
          mv = GameMove{opch, 1, i2, best};
          return true;
        }
      }
      for (int j2 : reach_positions(g.b, cj, strict)) {
        bool all_win = true;
        int best = -1, best_rank = -1;
        for (int i2 : reach_positions(g.a, ci, strict)) {
          int rk = rank(i2, j2);
          if (rk > r - 1) {
            all_win = false;
            break;
          }
          if (rk > best_rank) {
            best_rank = rk;
            best = i2;
          }
        }
        if (all_win) {
          mv = GameMove{opch, 2, best, j2};
          return true;
        }
      }
      return false;
    };
    if (!found && ops.has_f && try_jump(false, 'F')) found = true;
    if (!found && ops.has_sf && try_jump(true, 'S')) found = true;
    if (!found) throw Error("strategy reconstruction failed");
    moves.push_back(mv);
    ci = mv.pos1;
    cj = mv.pos2;
    r = rank(ci, cj);
  }
  return moves;
}

bool certify_indistinguishable(const WitnessPair& pair, GameOperators ops,
                               int k) {
  return !spoiler_wins(pair.w1, pair.w2, ops, k);
}

}  // namespace ltlfrag
