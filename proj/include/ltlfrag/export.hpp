// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ltlfrag/decider.hpp"
#include "ltlfrag/quotient.hpp"

namespace ltlfrag {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of_gcma(const Gcma& a);
ordered_json json_of_quotient(const QuotientAutomaton& q);
ordered_json json_of_verdict(const Verdict& v);
ordered_json json_of_witness(const Alphabet& alphabet, const WitnessPair& w);

// Graphviz output. Edges follow the transition graph: an edge p -> q
// with label a means p = a . q.
std::string dot_of_gcma(const Gcma& a);
std::string dot_of_quotient(const QuotientAutomaton& q);

}  // namespace ltlfrag
