// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/patterns.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ltlfrag {

std::string pattern_name(PatternId id) {
  switch (id) {
    case PatternId::T1: return "T1";
    case PatternId::T2: return "T2";
    case PatternId::T3: return "T3";
    case PatternId::T4: return "T4";
  }
  throw Error("unknown pattern id");
}

std::string witness_relation_name(WitnessRelation r) {
  switch (r) {
    case WitnessRelation::PrefixEqual: return "prefix-equal";
    case WitnessRelation::StutterEquivalent: return "stutter-equivalent";
    case WitnessRelation::OccEqualPumped: return "occurrence-equal-pumped";
    case WitnessRelation::XfPumped: return "block-pumped";
  }
  throw Error("unknown witness relation");
}

namespace {

// Transition-graph successor lists with letters: the edge from
// circ(a, c) to c carries letter a, so a path's labels read in order
// satisfy from = labels o to.
std::vector<std::vector<std::pair<int, int>>> successors(
    const QuotientAutomaton& qa) {
  std::vector<std::vector<std::pair<int, int>>> succ(qa.num_classes);
  for (int l = 0; l < qa.alphabet.size(); ++l)
    for (int c = 0; c < qa.num_classes; ++c)
      succ[qa.circ[l][c]].emplace_back(c, l);
  return succ;
}

// Shortest path labels from one class to another; throws when there is
// no path.
Word quotient_path(const QuotientAutomaton& qa, int from, int to) {
  auto succ = successors(qa);
  std::vector<int> prev(qa.num_classes, -2);
  std::vector<int> letter(qa.num_classes, -1);
  prev[from] = -1;
  std::deque<int> queue = {from};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    if (c == to) {
      Word labels;
      for (int cur = to; cur != from; cur = prev[cur])
        labels.push_back(letter[cur]);
      std::reverse(labels.begin(), labels.end());
      return labels;
    }
    for (auto [t, l] : succ[c])
      if (prev[t] == -2) {
        prev[t] = c;
        letter[t] = l;
        queue.push_back(t);
      }
  }
  throw Error("no path between the classes");
}

struct PairCycle {
  int p = -1;
  int q = -1;
  Word word;
};

// Cycle in the graph of distinct class pairs under simultaneous letter
// application; a pair whose images coincide has no outgoing edges. The
// returned word fixes both classes of the reported pair.
std::optional<PairCycle> pair_cycle(const QuotientAutomaton& qa,
                                    bool same_scc_only) {
  int letters = qa.alphabet.size();
  std::vector<std::pair<int, int>> nodes;
  std::map<std::pair<int, int>, int> ids;
  for (int i = 0; i < qa.num_classes; ++i)
    for (int j = i + 1; j < qa.num_classes; ++j) {
      if (same_scc_only && qa.scc.scc_of[i] != qa.scc.scc_of[j]) continue;
      ids.emplace(std::make_pair(i, j), static_cast<int>(nodes.size()));
      nodes.emplace_back(i, j);
    }
  auto target = [&](int node, int l) {
    int ti = qa.circ[l][nodes[node].first];
    int tj = qa.circ[l][nodes[node].second];
    if (ti == tj) return -1;
    if (ti > tj) std::swap(ti, tj);
    auto it = ids.find({ti, tj});
    return it == ids.end() ? -1 : it->second;
  };
  std::vector<std::vector<int>> succ(nodes.size());
  for (size_t v = 0; v < nodes.size(); ++v)
    for (int l = 0; l < letters; ++l) {
      int t = target(static_cast<int>(v), l);
      if (t >= 0) succ[v].push_back(t);
    }
  SccInfo info = graph_sccs(succ);
  int seed = -1;
  for (size_t v = 0; v < nodes.size() && seed < 0; ++v)
    if (info.has_edge[info.scc_of[v]]) seed = static_cast<int>(v);
  if (seed < 0) return std::nullopt;

  std::vector<int> seen_at(nodes.size(), -1);
  std::vector<int> walk_letters;
  int cur = seed;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(walk_letters.size());
    int next = -1;
    int step = -1;
    for (int l = 0; l < letters && next < 0; ++l) {
      int t = target(cur, l);
      if (t >= 0 && info.scc_of[t] == info.scc_of[cur]) {
        next = t;
        step = l;
      }
    }
    if (next < 0) throw Error("pair walk left its component");
    walk_letters.push_back(step);
    cur = next;
  }
  PairCycle out;
  out.p = nodes[cur].first;
  out.q = nodes[cur].second;
  out.word.assign(walk_letters.begin() + seen_at[cur], walk_letters.end());
  std::reverse(out.word.begin(), out.word.end());
  // The walk tracks unordered pairs, so the cycle word may swap the two
  // classes instead of fixing them; its square then fixes both.
  int image = out.p;
  for (auto it = out.word.rbegin(); it != out.word.rend(); ++it)
    image = qa.circ[*it][image];
  if (image != out.p) {
    Word doubled = out.word;
    doubled.insert(doubled.end(), out.word.begin(), out.word.end());
    out.word = std::move(doubled);
  }
  return out;
}

}  // namespace

std::optional<PatternHit> find_t1(const QuotientAutomaton& q) {
  auto cycle = pair_cycle(q, false);
  if (!cycle) return std::nullopt;
  PatternHit hit;
  hit.id = PatternId::T1;
  hit.p = cycle->p;
  hit.q = cycle->q;
  hit.x = cycle->word;
  return hit;
}

std::optional<PatternHit> find_t2(const QuotientAutomaton& q) {
  for (int r = 0; r < q.num_classes; ++r)
    for (int s = r + 1; s < q.num_classes; ++s) {
      if (q.scc.scc_of[r] != q.scc.scc_of[s]) continue;
      for (int l = 0; l < q.alphabet.size(); ++l) {
        if (q.circ[l][r] == q.circ[l][s]) continue;
        PatternHit hit;
        hit.id = PatternId::T2;
        hit.r = r;
        hit.s = s;
        hit.letter = l;
        hit.p = q.circ[l][r];
        hit.q = q.circ[l][s];
        hit.x = quotient_path(q, r, s);
        hit.y = quotient_path(q, s, r);
        return hit;
      }
    }
  return std::nullopt;
}

std::optional<PatternHit> find_t3(const QuotientAutomaton& q) {
  for (int r = 0; r < q.num_classes; ++r)
    for (int l = 0; l < q.alphabet.size(); ++l) {
      int once = q.circ[l][r];
      int twice = q.circ[l][once];
      if (twice == once) continue;
      PatternHit hit;
      hit.id = PatternId::T3;
      hit.r = r;
      hit.letter = l;
      hit.q = once;
      hit.p = twice;
      return hit;
    }
  return std::nullopt;
}

std::optional<PatternHit> find_t4(const QuotientAutomaton& q) {
  auto cycle = pair_cycle(q, true);
  if (!cycle) return std::nullopt;
  PatternHit hit;
  hit.id = PatternId::T4;
  hit.p = cycle->p;
  hit.q = cycle->q;
  hit.z = cycle->word;
  hit.x = quotient_path(q, hit.p, hit.q);
  hit.y = quotient_path(q, hit.q, hit.p);
  return hit;
}

}  // namespace ltlfrag
