// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/gcma.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ltlfrag/quotient.hpp"

namespace ltlfrag {

bool Gcma::is_initial(int q) const {
  return std::binary_search(initial.begin(), initial.end(), q);
}

int Gcma::apply_word(const Word& u, int q) const {
  int s = q;
  for (auto it = u.rbegin(); it != u.rend(); ++it) s = delta[*it][s];
  return s;
}

namespace {

// Membership of each subformula in delta(letter, phi), evaluated bottom
// up; children precede parents in the subformula order, so one pass
// computes the least closed set.
unsigned successor_set(const std::vector<Formula>& subs,
                       const std::vector<std::pair<int, int>>& children,
                       int letter, unsigned phi) {
  unsigned psi = 0;
  for (size_t i = 0; i < subs.size(); ++i) {
    const Formula& f = subs[i];
    unsigned self = 1u << i;
    bool in_phi = (phi & self) != 0;
    auto in_psi = [&](int child) { return (psi & (1u << child)) != 0; };
    int l = children[i].first;
    int r = children[i].second;
    bool member = false;
    switch (f.kind()) {
      case FormulaKind::Letter:
        member = f.letter() == letter;
        break;
      case FormulaKind::And:
        member = in_psi(l) && in_psi(r);
        break;
      case FormulaKind::Or:
        member = in_psi(l) || in_psi(r);
        break;
      case FormulaKind::Next:
        member = (phi & (1u << l)) != 0;
        break;
      case FormulaKind::Eventually:
        member = in_psi(l) || in_phi;
        break;
      case FormulaKind::Always:
        member = in_psi(l) && in_phi;
        break;
      case FormulaKind::Until:
        member = in_psi(r) || (in_psi(l) && in_phi);
        break;
      case FormulaKind::Release:
        member = in_psi(r) && (in_psi(l) || in_phi);
        break;
      case FormulaKind::Not:
        throw Error("tableau construction requires negation normal form");
    }
    if (member) psi |= self;
  }
  return psi;
}

std::vector<int> sorted_mask_states(int num_states, unsigned bit,
                                    const std::vector<unsigned>& sets,
                                    bool present) {
  std::vector<int> out;
  for (int q = 0; q < num_states; ++q)
    if (((sets[q] & bit) != 0) == present) out.push_back(q);
  return out;
}

}  // namespace

Gcma build_gcma(const Formula& nnf_formula, int max_sub) {
  if (!nnf_formula.valid()) throw Error("operation on an empty formula handle");
  std::vector<Formula> subs = subformulas(nnf_formula);
  for (const auto& f : subs)
    if (f.kind() == FormulaKind::Not)
      throw Error("tableau construction requires negation normal form");
  int n = static_cast<int>(subs.size());
  if (n > max_sub) {
    std::ostringstream msg;
    msg << "formula has " << n << " subformulas, limit is " << max_sub;
    throw LimitError(msg.str());
  }

  std::vector<std::pair<int, int>> children(n, {-1, -1});
  auto find_sub = [&](const Formula& f) {
    for (int i = 0; i < n; ++i)
      if (subs[i] == f) return i;
    throw Error("subformula closure is incomplete");
  };
  for (int i = 0; i < n; ++i) {
    if (subs[i].is_unary())
      children[i].first = find_sub(subs[i].left());
    else if (subs[i].is_binary()) {
      children[i].first = find_sub(subs[i].left());
      children[i].second = find_sub(subs[i].right());
    }
  }

  Gcma a;
  a.alphabet = nnf_formula.alphabet();
  a.num_states = 1 << n;
  a.subformula_order = subs;
  a.state_sets.resize(a.num_states);
  a.labels.resize(a.num_states);
  for (int q = 0; q < a.num_states; ++q) {
    a.state_sets[q] = static_cast<unsigned>(q);
    std::ostringstream label;
    label << "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if ((q & (1 << i)) == 0) continue;
      if (!first) label << ", ";
      label << subs[i].str();
      first = false;
    }
    label << "}";
    a.labels[q] = label.str();
  }

  int letters = a.alphabet.size();
  a.delta.assign(letters, std::vector<int>(a.num_states));
  for (int l = 0; l < letters; ++l)
    for (int q = 0; q < a.num_states; ++q)
      a.delta[l][q] = static_cast<int>(
          successor_set(subs, children, l, static_cast<unsigned>(q)));

  int root = find_sub(nnf_formula);
  a.initial = sorted_mask_states(a.num_states, 1u << root, a.state_sets, true);

  for (int i = 0; i < n; ++i) {
    const Formula& f = subs[i];
    unsigned self = 1u << i;
    std::vector<int> fin;
    switch (f.kind()) {
      case FormulaKind::Eventually: {
        unsigned arg = 1u << children[i].first;
        for (int q = 0; q < a.num_states; ++q)
          if ((q & arg) != 0 || (q & self) == 0) fin.push_back(q);
        break;
      }
      case FormulaKind::Always: {
        unsigned arg = 1u << children[i].first;
        for (int q = 0; q < a.num_states; ++q)
          if ((q & self) != 0 || (q & arg) == 0) fin.push_back(q);
        break;
      }
      case FormulaKind::Until: {
        unsigned arg = 1u << children[i].second;
        for (int q = 0; q < a.num_states; ++q)
          if ((q & arg) != 0 || (q & self) == 0) fin.push_back(q);
        break;
      }
      case FormulaKind::Release: {
        unsigned arg = 1u << children[i].second;
        for (int q = 0; q < a.num_states; ++q)
          if ((q & self) != 0 || (q & arg) == 0) fin.push_back(q);
        break;
      }
      default:
        continue;
    }
    a.final_sets.push_back(std::move(fin));
  }
  return a;
}

Gcma trim(const Gcma& a) {
  int n = a.num_states;
  if (n == 0) return a;
  std::vector<std::vector<int>> succ(n);
  for (int l = 0; l < a.alphabet.size(); ++l)
    for (int q = 0; q < n; ++q) succ[a.delta[l][q]].push_back(q);
  SccInfo scc = graph_sccs(succ);

  std::vector<char> viable(scc.count, 1);
  for (int c = 0; c < scc.count; ++c) viable[c] = scc.has_edge[c];
  for (const auto& fin : a.final_sets) {
    std::vector<char> meets(scc.count, 0);
    for (int q : fin) meets[scc.scc_of[q]] = 1;
    for (int c = 0; c < scc.count; ++c)
      if (!meets[c]) viable[c] = 0;
  }

  std::vector<char> active(n, 0);
  std::deque<int> queue;
  for (int q = 0; q < n; ++q)
    if (viable[scc.scc_of[q]]) {
      active[q] = 1;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int l = 0; l < a.alphabet.size(); ++l) {
      int p = a.delta[l][q];
      if (!active[p]) {
        active[p] = 1;
        queue.push_back(p);
      }
    }
  }

  std::vector<int> new_id(n, -1);
  int kept = 0;
  for (int q = 0; q < n; ++q)
    if (active[q]) new_id[q] = kept++;

  Gcma out;
  out.alphabet = a.alphabet;
  out.num_states = kept;
  out.subformula_order = a.subformula_order;
  out.labels.resize(kept);
  if (!a.state_sets.empty()) out.state_sets.resize(kept);
  for (int q = 0; q < n; ++q) {
    if (new_id[q] < 0) continue;
    out.labels[new_id[q]] = a.labels.empty() ? "" : a.labels[q];
    if (!a.state_sets.empty()) out.state_sets[new_id[q]] = a.state_sets[q];
  }
  out.delta.assign(a.alphabet.size(), std::vector<int>(kept, -1));
  for (int l = 0; l < a.alphabet.size(); ++l)
    for (int q = 0; q < n; ++q)
      if (new_id[q] >= 0) out.delta[l][new_id[q]] = new_id[a.delta[l][q]];
  for (int q : a.initial)
    if (new_id[q] >= 0) out.initial.push_back(new_id[q]);
  for (const auto& fin : a.final_sets) {
    std::vector<int> nf;
    for (int q : fin)
      if (new_id[q] >= 0) nf.push_back(new_id[q]);
    out.final_sets.push_back(std::move(nf));
  }
  return out;
}

bool language_empty(const Gcma& a) { return trim(a).initial.empty(); }

std::vector<int> loop_states(const Gcma& a, const Word& u) {
  if (u.empty()) throw Error("loop test needs a nonempty word");
  std::vector<int> out;
  for (int q = 0; q < a.num_states; ++q) {
    std::vector<char> visited(a.num_states, 0);
    int s = q;
    visited[s] = 1;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      s = a.delta[*it][s];
      visited[s] = 1;
    }
    if (s != q) continue;
    bool all_final_met = true;
    for (const auto& fin : a.final_sets) {
      bool met = false;
      for (int f : fin)
        if (visited[f]) {
          met = true;
          break;
        }
      if (!met) {
        all_final_met = false;
        break;
      }
    }
    if (all_final_met) out.push_back(q);
  }
  return out;
}

int anchor(const Gcma& a, const Word& u) {
  std::vector<int> cands = loop_states(a, u);
  if (cands.size() == 1) return cands[0];
  std::ostringstream msg;
  msg << "word " << word_str(a.alphabet, u) << " has " << cands.size()
      << " loop states, expected exactly one";
  throw Error(msg.str());
}

int AnchorTable::anchor(const Word& u) {
  auto it = memo_.find(u);
  if (it != memo_.end()) return it->second;
  int q = ltlfrag::anchor(a_, u);
  memo_.emplace(u, q);
  return q;
}

bool accepts(const Gcma& a, const UPWord& w) {
  if (a.num_states == 0 || a.initial.empty()) return false;
  UPWord c = w.canonical();
  int q = anchor(a, c.loop());
  return a.is_initial(a.apply_word(c.stem(), q));
}

std::vector<int> final_run_prefix(const Gcma& a, const UPWord& w, int n) {
  if (a.num_states == 0) throw Error("automaton has no states");
  if (n < 0) throw Error("negative run prefix length");
  int stem = static_cast<int>(w.stem().size());
  int loop = static_cast<int>(w.loop().size());
  int m = std::max(n, stem);
  int over = (m - stem) % loop;
  if (over != 0) m += loop - over;
  std::vector<int> run(m + 1, -1);
  run[m] = anchor(a, w.loop());
  for (int i = m - 1; i >= 0; --i)
    run[i] = a.delta[w.at(i)][run[i + 1]];
  run.resize(n + 1);
  return run;
}

Gcma figure_fixture() {
  Gcma a;
  a.alphabet = Alphabet::parse("a,b");
  a.num_states = 4;
  a.labels = {"q0", "q1", "q2", "q3"};
  a.initial = {0, 1};
  a.delta = {{0, 0, 2, 2}, {0, 1, 3, 3}};
  a.final_sets = {{1, 2}};
  return a;
}

}  // namespace ltlfrag
