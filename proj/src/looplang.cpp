// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/looplang.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ltlfrag {

int Dfa::run(const Word& w) const {
  int s = start;
  for (int l : w) s = delta[l][s];
  return s;
}

bool Dfa::accepts_word(const Word& w) const { return accepting[run(w)]; }

Dfa loop_dfa(const Gcma& a, int q) {
  if (q < 0 || q >= a.num_states) throw Error("state out of range");
  int letters = a.alphabet.size();
  int nfin = static_cast<int>(a.final_sets.size());
  unsigned full = (1u << nfin) - 1;

  std::vector<unsigned> member_mask(a.num_states, 0);
  for (int f = 0; f < nfin; ++f)
    for (int s : a.final_sets[f]) member_mask[s] |= 1u << f;

  auto key = [&](int p, unsigned m) {
    return static_cast<long long>(p) * (full + 1) + m;
  };
  std::map<long long, int> ids;
  std::vector<std::pair<int, unsigned>> nodes;
  auto intern = [&](int p, unsigned m) {
    auto [it, inserted] = ids.emplace(key(p, m), static_cast<int>(nodes.size()));
    if (inserted) nodes.emplace_back(p, m);
    return it->second;
  };

  Dfa d;
  d.num_letters = letters;
  d.start = intern(q, member_mask[q]);
  d.delta.assign(letters, {});
  for (size_t done = 0; done < nodes.size(); ++done) {
    auto [p, m] = nodes[done];
    for (int l = 0; l < letters; ++l) {
      int p2 = a.delta[l][p];
      int t = intern(p2, m | member_mask[p2]);
      for (int k = 0; k < letters; ++k)
        if (d.delta[k].size() < nodes.size()) d.delta[k].resize(nodes.size(), -1);
      d.delta[l][done] = t;
    }
  }
  d.num_states = static_cast<int>(nodes.size());
  for (int l = 0; l < letters; ++l) d.delta[l].resize(d.num_states, -1);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < d.num_states; ++i)
    d.accepting[i] = nodes[i].first == q && nodes[i].second == full;
  return d;
}

Dfa loop_language(const Gcma& a, const Partition& p, int class_id) {
  if (class_id < 0 || class_id >= p.num_classes)
    throw Error("class out of range");
  std::vector<Dfa> members;
  for (int s = 0; s < a.num_states; ++s)
    if (p.class_of[s] == class_id) members.push_back(loop_dfa(a, s));
  if (members.empty()) throw Error("class has no states");

  int letters = a.alphabet.size();
  const long long limit = 100000;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> nodes;
  auto intern = [&](std::vector<int> tuple) {
    auto [it, inserted] = ids.emplace(std::move(tuple), static_cast<int>(nodes.size()));
    if (inserted) nodes.push_back(it->first);
    return it->second;
  };

  std::vector<int> start(members.size());
  for (size_t i = 0; i < members.size(); ++i) start[i] = members[i].start;

  Dfa d;
  d.num_letters = letters;
  d.start = intern(std::move(start));
  std::vector<std::vector<int>> delta(letters);
  for (size_t done = 0; done < nodes.size(); ++done) {
    if (static_cast<long long>(nodes.size()) > limit)
      throw LimitError("loop language product exceeds the state limit");
    std::vector<int> tuple = nodes[done];
    for (int l = 0; l < letters; ++l) {
      std::vector<int> next(tuple.size());
      for (size_t i = 0; i < tuple.size(); ++i)
        next[i] = members[i].delta[l][tuple[i]];
      int t = intern(std::move(next));
      for (int k = 0; k < letters; ++k) delta[k].resize(nodes.size(), -1);
      delta[l][done] = t;
    }
  }
  d.num_states = static_cast<int>(nodes.size());
  d.delta = std::move(delta);
  for (int l = 0; l < letters; ++l) d.delta[l].resize(d.num_states, -1);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < d.num_states; ++i)
    for (size_t m = 0; m < members.size(); ++m)
      if (members[m].accepting[nodes[i][m]]) d.accepting[i] = 1;
  return d;
}

namespace {

// A bridged product path: both automata read the reversal of v, then the
// bridge letters, then the reversal of u. Lengths compare by total moves.
struct BridgeHit {
  Word u;
  int first = -1;
  int second = -1;
  Word v;
  int moves = 0;
};

constexpr int kMovePhase1 = 0;
constexpr int kMoveBridge = 1;
constexpr int kMovePhase2 = 2;

struct SearchState {
  std::vector<int> prev;
  std::vector<int> kind;
  std::vector<int> letter1;
  std::vector<int> letter2;
  std::vector<int> depth;
};

BridgeHit reconstruct(const SearchState& st, int node) {
  BridgeHit hit;
  hit.moves = st.depth[node];
  int cur = node;
  while (st.kind[cur] == kMovePhase2) {
    hit.u.push_back(st.letter1[cur]);
    cur = st.prev[cur];
  }
  hit.first = st.letter1[cur];
  hit.second = st.letter2[cur];
  cur = st.prev[cur];
  while (cur >= 0 && st.kind[cur] == kMovePhase1) {
    hit.v.push_back(st.letter1[cur]);
    cur = st.prev[cur];
  }
  return hit;
}

// Shortest u, a, v with reverse(u a v) accepted by d1 and
// reverse(u a a v) accepted by d2.
std::optional<BridgeHit> stutter_search(const Dfa& d1, const Dfa& d2) {
  int n1 = d1.num_states, n2 = d2.num_states;
  int letters = d1.num_letters;
  int total = n1 * n2 * 2;
  auto encode = [&](int s1, int s2, int ph) { return (ph * n2 + s2) * n1 + s1; };

  SearchState st;
  st.prev.assign(total, -2);
  st.kind.assign(total, -1);
  st.letter1.assign(total, -1);
  st.letter2.assign(total, -1);
  st.depth.assign(total, 0);
  std::deque<int> queue;
  int start = encode(d1.start, d2.start, 0);
  st.prev[start] = -1;
  queue.push_back(start);
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    int s1 = node % n1;
    int s2 = (node / n1) % n2;
    int ph = node / (n1 * n2);
    if (ph == 1 && d1.accepting[s1] && d2.accepting[s2])
      return reconstruct(st, node);
    auto enqueue = [&](int t, int kind, int l1, int l2) {
      if (st.prev[t] != -2) return;
      st.prev[t] = node;
      st.kind[t] = kind;
      st.letter1[t] = l1;
      st.letter2[t] = l2;
      st.depth[t] = st.depth[node] + 1;
      queue.push_back(t);
    };
    if (ph == 0) {
      for (int l = 0; l < letters; ++l)
        enqueue(encode(d1.delta[l][s1], d2.delta[l][s2], 0), kMovePhase1, l, l);
      for (int l = 0; l < letters; ++l)
        enqueue(encode(d1.delta[l][s1], d2.delta[l][d2.delta[l][s2]], 1),
                kMoveBridge, l, l);
    } else {
      for (int l = 0; l < letters; ++l)
        enqueue(encode(d1.delta[l][s1], d2.delta[l][s2], 1), kMovePhase2, l, l);
    }
  }
  return std::nullopt;
}

// Shortest u, a, b, v (a != b) with reverse(u a b v) accepted by d1 and
// reverse(u b a v) accepted by d2. Phase 1 = just bridged with empty u,
// accepted only when allow_empty_context holds.
std::optional<BridgeHit> swap_search(const Dfa& d1, const Dfa& d2,
                                     bool allow_empty_context) {
  int n1 = d1.num_states, n2 = d2.num_states;
  int letters = d1.num_letters;
  int total = n1 * n2 * 3;
  auto encode = [&](int s1, int s2, int ph) { return (ph * n2 + s2) * n1 + s1; };

  SearchState st;
  st.prev.assign(total, -2);
  st.kind.assign(total, -1);
  st.letter1.assign(total, -1);
  st.letter2.assign(total, -1);
  st.depth.assign(total, 0);
  std::deque<int> queue;
  int start = encode(d1.start, d2.start, 0);
  st.prev[start] = -1;
  queue.push_back(start);
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    int s1 = node % n1;
    int s2 = (node / n1) % n2;
    int ph = node / (n1 * n2);
    bool both = d1.accepting[s1] && d2.accepting[s2];
    if (both && (ph == 2 || (ph == 1 && allow_empty_context)))
      return reconstruct(st, node);
    auto enqueue = [&](int t, int kind, int l1, int l2) {
      if (st.prev[t] != -2) return;
      st.prev[t] = node;
      st.kind[t] = kind;
      st.letter1[t] = l1;
      st.letter2[t] = l2;
      st.depth[t] = st.depth[node] + 1;
      queue.push_back(t);
    };
    if (ph == 0) {
      for (int l = 0; l < letters; ++l)
        enqueue(encode(d1.delta[l][s1], d2.delta[l][s2], 0), kMovePhase1, l, l);
      // The counterexample words read a b and b a forward, so the
      // reversed automata consume b a and a b.
      for (int la = 0; la < letters; ++la)
        for (int lb = 0; lb < letters; ++lb) {
          if (la == lb) continue;
          int t1 = d1.delta[la][d1.delta[lb][s1]];
          int t2 = d2.delta[lb][d2.delta[la][s2]];
          enqueue(encode(t1, t2, 1), kMoveBridge, la, lb);
        }
    } else {
      for (int l = 0; l < letters; ++l)
        enqueue(encode(d1.delta[l][s1], d2.delta[l][s2], 2), kMovePhase2, l, l);
    }
  }
  return std::nullopt;
}

std::vector<Dfa> class_languages(const Gcma& a, const Partition& p) {
  std::vector<Dfa> lls;
  lls.reserve(p.num_classes);
  for (int c = 0; c < p.num_classes; ++c)
    lls.push_back(loop_language(a, p, c));
  return lls;
}

}  // namespace

std::optional<StutterCounterexample> check_stutter_closure(const Gcma& a,
                                                           const Partition& p) {
  std::vector<Dfa> lls = class_languages(a, p);
  std::optional<BridgeHit> best;
  for (int c1 = 0; c1 < p.num_classes; ++c1)
    for (int c2 = 0; c2 < p.num_classes; ++c2) {
      if (c1 == c2) continue;
      auto hit = stutter_search(lls[c1], lls[c2]);
      if (hit && (!best || hit->moves < best->moves)) best = hit;
    }
  if (!best) return std::nullopt;
  StutterCounterexample out;
  out.u = best->u;
  out.letter = best->first;
  out.v = best->v;
  return out;
}

std::optional<SwapCounterexample> check_swap_closure(const Gcma& a,
                                                     const Partition& p,
                                                     bool strict) {
  std::vector<Dfa> lls = class_languages(a, p);
  Partition pos = positive_congruence(a, p);
  std::optional<BridgeHit> best;
  for (int c1 = 0; c1 < p.num_classes; ++c1)
    for (int c2 = 0; c2 < p.num_classes; ++c2) {
      if (c1 == c2) continue;
      bool allow_empty = strict || pos.class_of[c1] != pos.class_of[c2];
      auto hit = swap_search(lls[c1], lls[c2], allow_empty);
      if (hit && (!best || hit->moves < best->moves)) best = hit;
    }
  if (!best) return std::nullopt;
  SwapCounterexample out;
  out.u = best->u;
  out.a = best->first;
  out.b = best->second;
  out.v = best->v;
  return out;
}

TestabilityReport is_one_locally_testable(const Gcma& a, const Partition& p) {
  TestabilityReport report;
  report.stutter = check_stutter_closure(a, p);
  report.swap = check_swap_closure(a, p, false);
  report.one_lt = !report.stutter && !report.swap;
  return report;
}

Dfa minimize(const Dfa& d) {
  std::vector<int> order;
  std::vector<int> seen(d.num_states, -1);
  order.push_back(d.start);
  seen[d.start] = 0;
  for (size_t done = 0; done < order.size(); ++done)
    for (int l = 0; l < d.num_letters; ++l) {
      int t = d.delta[l][order[done]];
      if (seen[t] < 0) {
        seen[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  int n = static_cast<int>(order.size());
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;
  auto renumber = [&](std::vector<int>& raw) {
    std::map<int, int> remap;
    int next = 0;
    for (int& c : raw) {
      auto [it, inserted] = remap.emplace(c, next);
      if (inserted) ++next;
      c = it->second;
    }
    return next;
  };
  int num = renumber(cls);
  while (true) {
    std::map<std::vector<int>, int> groups;
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig;
      sig.reserve(d.num_letters + 1);
      sig.push_back(cls[i]);
      for (int l = 0; l < d.num_letters; ++l)
        sig.push_back(cls[seen[d.delta[l][order[i]]]]);
      auto [it, inserted] =
          groups.emplace(std::move(sig), static_cast<int>(groups.size()));
      raw[i] = it->second;
      (void)inserted;
    }
    int next_num = renumber(raw);
    if (next_num == num) break;
    cls = std::move(raw);
    num = next_num;
  }

  Dfa out;
  out.num_letters = d.num_letters;
  out.num_states = num;
  out.start = cls[0];
  out.delta.assign(d.num_letters, std::vector<int>(num, -1));
  out.accepting.assign(num, 0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < d.num_letters; ++l)
      out.delta[l][cls[i]] = cls[seen[d.delta[l][order[i]]]];
    out.accepting[cls[i]] = d.accepting[order[i]];
  }
  return out;
}

Semigroup transition_semigroup(const Dfa& d, int max_size) {
  Semigroup s;
  std::map<std::vector<int>, int> ids;
  auto intern = [&](std::vector<int> map) {
    auto [it, inserted] = ids.emplace(std::move(map), s.size);
    if (inserted) {
      s.maps.push_back(it->first);
      ++s.size;
      if (s.size > max_size)
        throw LimitError("transition semigroup exceeds the element limit");
    }
    return it->second;
  };

  for (int l = 0; l < d.num_letters; ++l) {
    std::vector<int> map(d.num_states);
    for (int q = 0; q < d.num_states; ++q) map[q] = d.delta[l][q];
    s.letter_element.push_back(intern(std::move(map)));
  }
  for (int e = 0; e < s.size; ++e) {
    for (int l = 0; l < d.num_letters; ++l) {
      std::vector<int> map(d.num_states);
      for (int q = 0; q < d.num_states; ++q)
        map[q] = d.delta[l][s.maps[e][q]];
      intern(std::move(map));
    }
  }

  s.product.assign(s.size, std::vector<int>(s.size, -1));
  for (int i = 0; i < s.size; ++i)
    for (int j = 0; j < s.size; ++j) {
      std::vector<int> map(d.num_states);
      for (int q = 0; q < d.num_states; ++q) map[q] = s.maps[j][s.maps[i][q]];
      auto it = ids.find(map);
      if (it == ids.end()) throw Error("semigroup closure is incomplete");
      s.product[i][j] = it->second;
    }
  return s;
}

bool dfa_locally_testable(const Dfa& d, int max_semigroup) {
  Dfa m = minimize(d);
  Semigroup s = transition_semigroup(m, max_semigroup);
  for (int e = 0; e < s.size; ++e) {
    if (!s.idempotent(e)) continue;
    std::vector<int> local;
    std::vector<char> in_local(s.size, 0);
    for (int x = 0; x < s.size; ++x) {
      int exe = s.product[s.product[e][x]][e];
      if (!in_local[exe]) {
        in_local[exe] = 1;
        local.push_back(exe);
      }
    }
    for (int x : local)
      if (!s.idempotent(x)) return false;
    for (int x : local)
      for (int y : local)
        if (s.product[x][y] != s.product[y][x]) return false;
  }
  return true;
}

bool dfa_stutter_invariant(const Dfa& d, int max_semigroup) {
  (void)max_semigroup;
  Dfa m = minimize(d);
  for (int l = 0; l < m.num_letters; ++l)
    for (int q = 0; q < m.num_states; ++q)
      if (m.delta[l][m.delta[l][q]] != m.delta[l][q]) return false;
  return true;
}

bool dfa_occurrence_determined(const Dfa& d, int max_semigroup) {
  Dfa m = minimize(d);
  Semigroup s = transition_semigroup(m, max_semigroup);
  for (int e = 0; e < s.size; ++e)
    if (!s.idempotent(e)) return false;
  for (int i = 0; i < s.size; ++i)
    for (int j = 0; j < s.size; ++j)
      if (s.product[i][j] != s.product[j][i]) return false;
  return true;
}

bool is_locally_testable(const Gcma& a, const Partition& p, int class_id,
                         int max_semigroup) {
  return dfa_locally_testable(loop_language(a, p, class_id), max_semigroup);
}

}  // namespace ltlfrag
