// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <vector>

#include "ltlfrag/gcma.hpp"

namespace ltlfrag {

// Partition of the automaton states; class ids are dense and ordered by
// the smallest member state.
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;
};

// Coarsest partition where equivalent states agree on membership of
// u . q in the initial set for every finite word u, including the empty
// word. Equivalent states have equivalent letter successors, so the
// partition is a left congruence.
Partition left_congruence(const Gcma& a);

// Groups the classes of the left congruence into the coarser partition
// that only requires agreement on nonempty words: two states are grouped
// exactly when all their one-letter successors are equivalent. Returns a
// partition of the classes (indexed by class id of `p`).
Partition positive_congruence(const Gcma& a, const Partition& p);

struct SccInfo {
  std::vector<int> scc_of;     // node -> scc id, reverse topological order
  std::vector<char> has_edge;  // scc id -> contains an edge
  int count = 0;
};

// SCC decomposition of a successor-list graph.
SccInfo graph_sccs(const std::vector<std::vector<int>>& succ);

// Quotient of the automaton by the left congruence: circ maps a letter
// and a class to the class of any member's successor. The transition
// graph has an edge from circ(a, c) to c for every pair; scc fields
// describe that graph, where a class not on a cycle forms a singleton
// SCC without edges.
struct QuotientAutomaton {
  Alphabet alphabet;
  int num_classes = 0;
  std::vector<int> class_of;         // gcma state -> class
  std::vector<int> representative;   // class -> smallest member state
  std::vector<char> initial_class;   // class -> lies inside the initial set
  std::vector<std::vector<int>> circ;  // circ[letter][class]
  SccInfo scc;

  int apply(int letter, int c) const { return circ[letter][c]; }
  // u o c, applied last letter first.
  int apply_word(const Word& u, int c) const;
};

QuotientAutomaton quotient(const Gcma& a, const Partition& p);

// SCC decomposition of the quotient transition graph (recomputed from
// circ; quotient() already stores one in the scc field).
SccInfo sccs(const QuotientAutomaton& q);

}  // namespace ltlfrag
