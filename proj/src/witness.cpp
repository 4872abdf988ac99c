// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "ltlfrag/patterns.hpp"

namespace ltlfrag {

namespace {

constexpr long long kMaxWitnessLetters = 200000;

void append(Word& w, const Word& part) {
  if (static_cast<long long>(w.size() + part.size()) > kMaxWitnessLetters)
    throw LimitError("witness word exceeds the length limit");
  w.insert(w.end(), part.begin(), part.end());
}

void append_repeat(Word& w, const Word& part, long long times) {
  for (long long i = 0; i < times; ++i) append(w, part);
}

Word repeat(const Word& part, long long times) {
  Word w;
  append_repeat(w, part, times);
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& part : parts) append(w, part);
  return w;
}

// Shortest word distinguishing two states: u . p and u . q disagree on
// initial membership. Applying a letter to both states of a pair is one
// search step, and the letters collected on the way back from the
// disagreeing pair already spell u front to back.
Word distinguisher(const Gcma& a, int p, int q) {
  if (p == q) throw Error("cannot distinguish a state from itself");
  int n = a.num_states;
  int letters = a.alphabet.size();
  std::vector<int> prev(n * n, -2);
  std::vector<int> via(n * n, -1);
  int start = p * n + q;
  prev[start] = -1;
  std::deque<int> queue = {start};
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    int s = node / n, t = node % n;
    if (a.is_initial(s) != a.is_initial(t)) {
      Word u;
      for (int cur = node; cur != start; cur = prev[cur])
        u.push_back(via[cur]);
      return u;
    }
    for (int l = 0; l < letters; ++l) {
      int next = a.delta[l][s] * n + a.delta[l][t];
      if (prev[next] == -2) {
        prev[next] = node;
        via[next] = l;
        queue.push_back(next);
      }
    }
  }
  throw Error("states are not distinguishable");
}

// Forward reachability in the transition graph: builds ultimately
// periodic tails whose final run starts at a requested state.
struct TailBuilder {
  const Gcma& a;
  std::vector<std::vector<std::pair<int, int>>> succ;  // (next state, letter)
  SccInfo scc;
  std::vector<char> viable;

  explicit TailBuilder(const Gcma& automaton) : a(automaton) {
    int letters = a.alphabet.size();
    succ.resize(a.num_states);
    std::vector<std::vector<int>> plain(a.num_states);
    for (int l = 0; l < letters; ++l)
      for (int s = 0; s < a.num_states; ++s) {
        succ[a.delta[l][s]].emplace_back(s, l);
        plain[a.delta[l][s]].push_back(s);
      }
    scc = graph_sccs(plain);
    viable.assign(scc.count, 0);
    for (int c = 0; c < scc.count; ++c) viable[c] = scc.has_edge[c];
    for (const auto& fin : a.final_sets) {
      std::vector<char> met(scc.count, 0);
      for (int s : fin) met[scc.scc_of[s]] = 1;
      for (int c = 0; c < scc.count; ++c)
        if (!met[c]) viable[c] = 0;
    }
  }

  // Shortest path labels from a state to any flagged state; the path end
  // is written to *end. Path semantics: from = labels . end.
  Word path(int from, const std::vector<char>& target, int* end) const {
    std::vector<int> prev(a.num_states, -2);
    std::vector<int> via(a.num_states, -1);
    prev[from] = -1;
    std::deque<int> queue = {from};
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      if (target[s]) {
        Word labels;
        for (int cur = s; cur != from; cur = prev[cur])
          labels.push_back(via[cur]);
        std::reverse(labels.begin(), labels.end());
        if (end) *end = s;
        return labels;
      }
      for (auto [t, l] : succ[s])
        if (prev[t] == -2) {
          prev[t] = s;
          via[t] = l;
          queue.push_back(t);
        }
    }
    throw Error("no path to a target state");
  }

  Word path_to(int from, int to) const {
    std::vector<char> target(a.num_states, 0);
    target[to] = 1;
    return path(from, target, nullptr);
  }

  // Nonempty loop word at s0 visiting every final set; anchor(c) = s0.
  Word covering_loop(int s0) const {
    int comp = scc.scc_of[s0];
    Word c;
    int cur = s0;
    for (const auto& fin : a.final_sets) {
      std::vector<char> target(a.num_states, 0);
      for (int s : fin)
        if (scc.scc_of[s] == comp) target[s] = 1;
      int end = cur;
      append(c, path(cur, target, &end));
      cur = end;
    }
    if (cur == s0 && c.empty()) {
      bool stepped = false;
      for (auto [t, l] : succ[s0])
        if (!stepped && scc.scc_of[t] == comp) {
          c.push_back(l);
          cur = t;
          stepped = true;
        }
      if (!stepped) throw Error("viable component has no internal edge");
    }
    append(c, path_to(cur, s0));
    return c;
  }

  // Ultimately periodic word whose final run starts at s.
  UPWord tail(int s) const {
    std::vector<char> target(a.num_states, 0);
    for (int q = 0; q < a.num_states; ++q)
      if (viable[scc.scc_of[q]]) target[q] = 1;
    int s0 = s;
    Word stem = path(s, target, &s0);
    Word loop = covering_loop(s0);
    if (anchor(a, loop) != s0) throw Error("covering loop misses its anchor");
    return UPWord(a.alphabet, stem, loop);
  }
};

// First state of the eventually periodic orbit s, f(s), f(f(s)), ...
// that lies on the orbit cycle, with the cycle length.
std::pair<int, int> orbit_cycle(int s, const std::function<int(int)>& f) {
  std::map<int, int> seen;
  std::vector<int> states;
  int cur = s;
  while (!seen.count(cur)) {
    seen[cur] = static_cast<int>(states.size());
    states.push_back(cur);
    cur = f(cur);
  }
  return {cur, static_cast<int>(states.size()) - seen[cur]};
}

// Smallest exponent e with idempotent e-th power of the state map.
long long idempotent_power(const Gcma& a, const Word& z) {
  std::vector<int> step(a.num_states);
  for (int s = 0; s < a.num_states; ++s) step[s] = a.apply_word(z, s);
  std::map<std::vector<int>, long long> seen;
  std::vector<int> cur = step;
  long long k = 1;
  while (!seen.count(cur)) {
    seen[cur] = k;
    std::vector<int> next(a.num_states);
    for (int s = 0; s < a.num_states; ++s) next[s] = step[cur[s]];
    cur = std::move(next);
    ++k;
    if (k > 100000) throw LimitError("idempotent power search exceeds its limit");
  }
  long long tail = seen[cur];
  long long period = k - tail;
  long long e = period;
  while (e < std::max<long long>(tail, 1)) e += period;
  return e;
}

long long smallest_multiple_at_least(long long base, long long bound) {
  long long m = base;
  while (m < bound) m += base;
  return m;
}

WitnessPair finish(const Gcma& a, UPWord w1, UPWord w2, WitnessRelation rel,
                   int pump) {
  if (accepts(a, w1) == accepts(a, w2))
    throw Error("witness words do not separate the language");
  WitnessPair pair;
  pair.w1 = std::move(w1);
  pair.w2 = std::move(w2);
  pair.relation = rel;
  pair.pump = pump;
  return pair;
}

WitnessPair witness_t1(const Gcma& a, const QuotientAutomaton& q,
                       const PatternHit& hit, int pump) {
  TailBuilder tails(a);
  auto act_x = [&](int s) { return a.apply_word(hit.x, s); };
  auto [pstar, lp] = orbit_cycle(q.representative[hit.p], act_x);
  auto [qstar, lq] = orbit_cycle(q.representative[hit.q], act_x);
  long long l = std::lcm<long long>(lp, lq);
  long long want = std::max(pump, 1);
  long long reps = smallest_multiple_at_least(
      l, (want + static_cast<long long>(hit.x.size()) - 1) /
             static_cast<long long>(hit.x.size()));
  if (a.apply_word(repeat(hit.x, reps), pstar) != pstar ||
      a.apply_word(repeat(hit.x, reps), qstar) != qstar)
    throw Error("pump word does not fix the orbit states");
  Word u = distinguisher(a, pstar, qstar);
  UPWord vp = tails.tail(pstar);
  UPWord vq = tails.tail(qstar);
  Word shared = concat({u, repeat(hit.x, reps)});
  UPWord w1(a.alphabet, concat({shared, vp.stem()}), vp.loop());
  UPWord w2(a.alphabet, concat({shared, vq.stem()}), vq.loop());
  return finish(a, w1, w2, WitnessRelation::PrefixEqual,
                static_cast<int>(shared.size()));
}

WitnessPair witness_t2(const Gcma& a, const QuotientAutomaton& q,
                       const PatternHit& hit, int pump) {
  TailBuilder tails(a);
  Word yx = concat({hit.y, hit.x});
  auto act = [&](int s) { return a.apply_word(yx, s); };
  auto [sstar, l] = orbit_cycle(q.representative[hit.s], act);
  int rstar = a.apply_word(hit.x, sstar);
  int from1 = a.delta[hit.letter][sstar];
  int from2 = a.delta[hit.letter][rstar];
  Word u = distinguisher(a, from2, from1);
  UPWord v = tails.tail(sstar);
  long long reps = smallest_multiple_at_least(l, std::max(pump, 1));
  Word pumped = repeat(yx, reps);
  Word letter = {hit.letter};
  UPWord w1(a.alphabet, concat({u, letter, pumped, v.stem()}), v.loop());
  UPWord w2(a.alphabet, concat({u, letter, hit.x, pumped, v.stem()}), v.loop());
  return finish(a, w1, w2, WitnessRelation::OccEqualPumped,
                static_cast<int>(reps));
}

WitnessPair witness_t3(const Gcma& a, const QuotientAutomaton& q,
                       const PatternHit& hit, int pump) {
  (void)pump;
  TailBuilder tails(a);
  int r = q.representative[hit.r];
  int qstar = a.delta[hit.letter][r];
  int pstar = a.delta[hit.letter][qstar];
  Word u = distinguisher(a, pstar, qstar);
  UPWord v = tails.tail(r);
  Word once = {hit.letter};
  Word twice = {hit.letter, hit.letter};
  UPWord w1(a.alphabet, concat({u, once, v.stem()}), v.loop());
  UPWord w2(a.alphabet, concat({u, twice, v.stem()}), v.loop());
  return finish(a, w1, w2, WitnessRelation::StutterEquivalent, 0);
}

WitnessPair witness_t4(const Gcma& a, const QuotientAutomaton& q,
                       const PatternHit& hit, int pump) {
  TailBuilder tails(a);
  long long e = idempotent_power(a, hit.z);
  Word big_z = repeat(hit.z, e);
  Word xp = concat({big_z, hit.x});
  Word yp = concat({big_z, hit.y});
  Word xy = concat({xp, yp});
  auto act = [&](int s) { return a.apply_word(xy, s); };
  int p0 = a.apply_word(big_z, q.representative[hit.p]);
  auto [pstar, m] = orbit_cycle(p0, act);
  int qstar = a.apply_word(yp, pstar);
  if (a.apply_word(big_z, pstar) != pstar ||
      a.apply_word(big_z, qstar) != qstar)
    throw Error("idempotent power does not stabilize the orbit");
  Word back = concat({repeat(xy, m - 1), xp});
  if (a.apply_word(back, qstar) != pstar)
    throw Error("orbit closing word does not return");
  Word u = distinguisher(a, pstar, qstar);
  UPWord v = tails.tail(pstar);
  long long n = std::max(pump, 1);
  Word zn = repeat(big_z, n);
  Word block = concat({zn, back, zn, yp});
  Word blocks = repeat(block, n);
  // Both words open with u zn, and every back or yp insertion sits between
  // zn pads, so the words share their n-letter prefix and their factor sets.
  UPWord w1(a.alphabet, concat({u, blocks, zn, v.stem()}), v.loop());
  UPWord w2(a.alphabet, concat({u, zn, yp, blocks, zn, v.stem()}), v.loop());
  return finish(a, w1, w2, WitnessRelation::XfPumped, static_cast<int>(n));
}

}  // namespace

WitnessPair witness(const Gcma& a, const QuotientAutomaton& q,
                    const PatternHit& hit, int pump) {
  switch (hit.id) {
    case PatternId::T1: return witness_t1(a, q, hit, pump);
    case PatternId::T2: return witness_t2(a, q, hit, pump);
    case PatternId::T3: return witness_t3(a, q, hit, pump);
    case PatternId::T4: return witness_t4(a, q, hit, pump);
  }
  throw Error("unknown pattern id");
}

}  // namespace ltlfrag
