// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/export.hpp"

#include <map>
#include <sstream>

namespace ltlfrag {

namespace {

ordered_json json_letters(const Alphabet& alpha) {
  ordered_json out = ordered_json::array();
  for (int l = 0; l < alpha.size(); ++l) out.push_back(alpha.letter(l));
  return out;
}

ordered_json json_delta(const Alphabet& alpha,
                        const std::vector<std::vector<int>>& delta) {
  ordered_json out = ordered_json::object();
  for (int l = 0; l < alpha.size(); ++l) out[alpha.letter(l)] = delta[l];
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// One edge per (source, target) pair, letters merged into the label.
std::string dot_edges(const Alphabet& alpha,
                      const std::vector<std::vector<int>>& delta, int nodes,
                      const char* prefix) {
  std::map<std::pair<int, int>, std::string> merged;
  for (int l = 0; l < alpha.size(); ++l)
    for (int q = 0; q < nodes; ++q) {
      std::string& label = merged[{delta[l][q], q}];
      if (!label.empty()) label += ",";
      label += alpha.letter(l);
    }
  std::ostringstream os;
  for (const auto& [edge, label] : merged)
    os << "  " << prefix << edge.first << " -> " << prefix << edge.second
       << " [label=\"" << dot_escape(label) << "\"];\n";
  return os.str();
}

}  // namespace

ordered_json json_of_gcma(const Gcma& a) {
  ordered_json out;
  out["alphabet"] = json_letters(a.alphabet);
  out["num_states"] = a.num_states;
  out["labels"] = a.labels;
  out["initial"] = a.initial;
  out["delta"] = json_delta(a.alphabet, a.delta);
  out["final_sets"] = a.final_sets;
  return out;
}

ordered_json json_of_quotient(const QuotientAutomaton& q) {
  ordered_json out;
  out["alphabet"] = json_letters(q.alphabet);
  out["num_classes"] = q.num_classes;
  out["class_of"] = q.class_of;
  out["representative"] = q.representative;
  ordered_json initial = ordered_json::array();
  for (char c : q.initial_class) initial.push_back(c != 0);
  out["initial_class"] = initial;
  out["circ"] = json_delta(q.alphabet, q.circ);
  out["scc_of"] = q.scc.scc_of;
  return out;
}

ordered_json json_of_witness(const Alphabet& alphabet, const WitnessPair& w) {
  ordered_json out;
  out["alphabet"] = json_letters(alphabet);
  out["w1"] = w.w1.str();
  out["w2"] = w.w2.str();
  out["relation"] = witness_relation_name(w.relation);
  out["pump"] = w.pump;
  return out;
}

ordered_json json_of_verdict(const Verdict& v) {
  ordered_json out;
  out["fragment"] = fragment_name(v.fragment);
  out["expressible"] = v.expressible;
  ordered_json reasons = ordered_json::array();
  for (const Reason& r : v.reasons) {
    ordered_json item;
    item["kind"] = r.kind;
    item["detail"] = r.detail;
    reasons.push_back(item);
  }
  out["reasons"] = reasons;
  out["notes"] = v.notes;
  if (v.witness)
    out["witness"] = json_of_witness(v.witness->w1.alphabet(), *v.witness);
  else
    out["witness"] = nullptr;
  ordered_json stats;
  stats["states"] = v.stats.states;
  stats["classes"] = v.stats.classes;
  stats["final_sets"] = v.stats.final_sets;
  out["stats"] = stats;
  return out;
}

std::string dot_of_gcma(const Gcma& a) {
  std::ostringstream os;
  os << "digraph gcma {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < a.num_states; ++q) {
    std::string label = dot_escape(
        q < static_cast<int>(a.labels.size()) && !a.labels[q].empty()
            ? a.labels[q]
            : "q" + std::to_string(q));
    for (std::size_t i = 0; i < a.final_sets.size(); ++i)
      for (int f : a.final_sets[i])
        if (f == q) label += "\\nF" + std::to_string(i);
    os << "  q" << q << " [label=\"" << label << "\"";
    if (a.is_initial(q)) os << ", shape=doublecircle";
    os << "];\n";
  }
  os << dot_edges(a.alphabet, a.delta, a.num_states, "q");
  os << "}\n";
  return os.str();
}

std::string dot_of_quotient(const QuotientAutomaton& q) {
  std::ostringstream os;
  os << "digraph quotient {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int c = 0; c < q.num_classes; ++c) {
    os << "  c" << c << " [label=\"C" << c << " (rep q" << q.representative[c]
       << ")\"";
    if (q.initial_class[c]) os << ", shape=doublecircle";
    os << "];\n";
  }
  os << dot_edges(q.alphabet, q.circ, q.num_classes, "c");
  os << "}\n";
  return os.str();
}

}  // namespace ltlfrag
