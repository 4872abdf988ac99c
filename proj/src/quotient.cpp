// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/quotient.hpp"

#include <algorithm>
#include <map>

namespace ltlfrag {

SccInfo graph_sccs(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  SccInfo res;
  res.scc_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < succ[f.v].size()) {
        int w = succ[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            res.scc_of[w] = res.count;
            if (w == v) break;
          }
          ++res.count;
        }
      }
    }
  }

  res.has_edge.assign(res.count, 0);
  for (int v = 0; v < n; ++v)
    for (int w : succ[v])
      if (res.scc_of[v] == res.scc_of[w]) res.has_edge[res.scc_of[v]] = 1;
  return res;
}

namespace {

// Remaps arbitrary class labels to dense ids ordered by smallest member.
Partition normalize(const std::vector<int>& raw) {
  Partition p;
  p.class_of.assign(raw.size(), -1);
  std::map<int, int> remap;
  for (size_t q = 0; q < raw.size(); ++q) {
    auto [it, inserted] = remap.emplace(raw[q], p.num_classes);
    if (inserted) ++p.num_classes;
    p.class_of[q] = it->second;
  }
  return p;
}

}  // namespace

Partition left_congruence(const Gcma& a) {
  int n = a.num_states;
  Partition p;
  p.class_of.assign(n, 0);
  if (n == 0) return p;
  for (int q = 0; q < n; ++q) p.class_of[q] = a.is_initial(q) ? 1 : 0;
  p = normalize(p.class_of);

  int letters = a.alphabet.size();
  while (true) {
    std::map<std::vector<int>, int> groups;
    std::vector<int> raw(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(letters + 1);
      sig.push_back(p.class_of[q]);
      for (int l = 0; l < letters; ++l)
        sig.push_back(p.class_of[a.delta[l][q]]);
      auto [it, inserted] =
          groups.emplace(std::move(sig), static_cast<int>(groups.size()));
      raw[q] = it->second;
      (void)inserted;
    }
    Partition next = normalize(raw);
    if (next.num_classes == p.num_classes) return next;
    p = std::move(next);
  }
}

Partition positive_congruence(const Gcma& a, const Partition& p) {
  int letters = a.alphabet.size();
  std::vector<int> rep(p.num_classes, -1);
  for (int q = a.num_states - 1; q >= 0; --q) rep[p.class_of[q]] = q;

  std::vector<int> raw(p.num_classes);
  std::map<std::vector<int>, int> groups;
  for (int c = 0; c < p.num_classes; ++c) {
    std::vector<int> sig(letters);
    for (int l = 0; l < letters; ++l)
      sig[l] = p.class_of[a.delta[l][rep[c]]];
    auto [it, inserted] =
        groups.emplace(std::move(sig), static_cast<int>(groups.size()));
    raw[c] = it->second;
    (void)inserted;
  }
  return normalize(raw);
}

int QuotientAutomaton::apply_word(const Word& u, int c) const {
  int s = c;
  for (auto it = u.rbegin(); it != u.rend(); ++it) s = circ[*it][s];
  return s;
}

QuotientAutomaton quotient(const Gcma& a, const Partition& p) {
  QuotientAutomaton q;
  q.alphabet = a.alphabet;
  q.num_classes = p.num_classes;
  q.class_of = p.class_of;
  q.representative.assign(p.num_classes, -1);
  for (int s = a.num_states - 1; s >= 0; --s)
    q.representative[p.class_of[s]] = s;

  q.initial_class.assign(p.num_classes, 0);
  for (int c = 0; c < p.num_classes; ++c)
    q.initial_class[c] = a.is_initial(q.representative[c]);
  for (int s = 0; s < a.num_states; ++s)
    if (a.is_initial(s) != static_cast<bool>(q.initial_class[p.class_of[s]]))
      throw Error("partition does not respect the initial set");

  int letters = a.alphabet.size();
  q.circ.assign(letters, std::vector<int>(p.num_classes, -1));
  for (int l = 0; l < letters; ++l)
    for (int c = 0; c < p.num_classes; ++c)
      q.circ[l][c] = p.class_of[a.delta[l][q.representative[c]]];
  for (int l = 0; l < letters; ++l)
    for (int s = 0; s < a.num_states; ++s)
      if (p.class_of[a.delta[l][s]] != q.circ[l][p.class_of[s]])
        throw Error("partition is not a left congruence");

  q.scc = sccs(q);
  return q;
}

SccInfo sccs(const QuotientAutomaton& q) {
  std::vector<std::vector<int>> succ(q.num_classes);
  for (int l = 0; l < q.alphabet.size(); ++l)
    for (int c = 0; c < q.num_classes; ++c) succ[q.circ[l][c]].push_back(c);
  return graph_sccs(succ);
}

}  // namespace ltlfrag
