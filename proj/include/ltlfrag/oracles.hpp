// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <string>

#include "ltlfrag/looplang.hpp"
#include "ltlfrag/quotient.hpp"

namespace ltlfrag {

// Bounded brute-force checks, independent of the product constructions
// and semigroup criteria they validate. All enumerate words up to a
// length bound in a fixed order.

// Every nonempty word up to max_len has exactly one loop state.
// Returns a description of the first violation, if any.
std::optional<std::string> oracle_anchor_unique(const Gcma& a, int max_len);

// Two states are in the same class exactly when u . p and u . q agree on
// initial-set membership for every word up to max_len.
std::optional<std::string> oracle_congruence(const Gcma& a, const Partition& p,
                                             int max_len);

// Occurrence condition on anchors, bounded: words u, v up to max_len
// with the same occurrence set have positively equivalent anchors, and
// additionally equivalent anchors when their first letters agree.
// Returns the first violating pair.
std::optional<std::string> oracle_occurrence_condition(const Gcma& a,
                                                       const Partition& p,
                                                       int max_len);

// Stutter condition on anchors, bounded: anchor(u a v) is equivalent to
// anchor(u a a v) for all decompositions up to max_len.
std::optional<std::string> oracle_stutter_condition(const Gcma& a,
                                                    const Partition& p,
                                                    int max_len);

// Definitional local testability of the language of a DFA, bounded: no
// pair of words up to max_len with equal k-prefix, k-suffix, and
// k-infix sets differs in membership, for some k <= max_k. Returns the
// smallest such k, or nothing when every k fails on the bounded range.
std::optional<int> oracle_locally_testable(const Dfa& d, int max_k,
                                           int max_len);

}  // namespace ltlfrag
