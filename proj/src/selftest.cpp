// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/selftest.hpp"

#include <random>
#include <sstream>

#include "ltlfrag/decider.hpp"
#include "ltlfrag/efgame.hpp"
#include "ltlfrag/eval.hpp"
#include "ltlfrag/formula_gen.hpp"
#include "ltlfrag/oracles.hpp"

namespace ltlfrag {

namespace {

// Empty string means the suite passed.
using Suite = std::string;

std::optional<Analysis> try_analyze(const Formula& f) {
  try {
    return analyze(f, {});
  } catch (const LimitError&) {
    return std::nullopt;
  }
}

Suite suite_acceptance_vs_eval(std::mt19937_64& rng) {
  Alphabet ab({"a", "b"});
  std::vector<UPWord> words = enumerate_upwords(ab, 3, 2);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    Formula f = random_formula(rng, ab, 3);
    auto an = try_analyze(f);
    if (!an) continue;
    ++checked;
    for (const UPWord& w : words)
      if (accepts(an->automaton, w) != eval(f, w)) {
        std::ostringstream os;
        os << "formula " << f.str() << " and word " << w.str()
           << " split acceptance from evaluation";
        return os.str();
      }
  }
  if (checked < 20) return "too few formulas analyzed";
  return {};
}

Suite suite_congruence_definition(std::mt19937_64& rng) {
  Alphabet ab({"a", "b"});
  int checked = 0;
  for (int i = 0; i < 25; ++i) {
    Formula f = random_formula(rng, ab, 3);
    auto an = try_analyze(f);
    if (!an || an->automaton.num_states > 9) continue;
    ++checked;
    auto bad = oracle_congruence(an->automaton, an->partition,
                                 an->automaton.num_states);
    if (bad) return "formula " + f.str() + ": " + *bad;
  }
  if (checked < 10) return "too few automata checked";
  return {};
}

Suite suite_anchors_and_coverage(std::mt19937_64& rng) {
  Alphabet ab({"a", "b"});
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    Formula f = random_formula(rng, ab, 3);
    auto an = try_analyze(f);
    if (!an || an->empty_language) continue;
    const Gcma& a = an->automaton;
    auto bad = oracle_anchor_unique(a, 4);
    if (bad) return "formula " + f.str() + ": " + *bad;
    std::vector<Dfa> dfas;
    try {
      for (int c = 0; c < an->partition.num_classes; ++c)
        dfas.push_back(loop_language(a, an->partition, c));
    } catch (const LimitError&) {
      continue;
    }
    ++checked;
    AnchorTable anchors(a);
    std::vector<Word> stack = {{}};
    while (!stack.empty()) {
      Word w = stack.back();
      stack.pop_back();
      if (!w.empty()) {
        int hits = 0, hit_class = -1;
        for (int c = 0; c < static_cast<int>(dfas.size()); ++c)
          if (dfas[c].accepts_word(w)) {
            ++hits;
            hit_class = c;
          }
        // The loop DFAs read reversed words.
        Word rev(w.rbegin(), w.rend());
        if (hits != 1 ||
            hit_class != an->partition.class_of[anchors.anchor(rev)]) {
          std::ostringstream os;
          os << "formula " << f.str() << ": word " << word_str(ab, w)
             << " lies in " << hits
             << " loop classes, anchor class " << (hits == 1 ? hit_class : -1)
             << " expected "
             << an->partition.class_of[anchors.anchor(rev)];
          return os.str();
        }
      }
      if (w.size() < 4)
        for (int l = 0; l < ab.size(); ++l) {
          Word w2 = w;
          w2.push_back(l);
          stack.push_back(std::move(w2));
        }
    }
  }
  if (checked < 8) return "too few automata checked";
  return {};
}

Suite suite_closure_oracles(std::mt19937_64& rng) {
  Alphabet ab({"a", "b"});
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    Formula f = random_formula(rng, ab, 3);
    auto an = try_analyze(f);
    if (!an || an->empty_language) continue;
    ++checked;
    const Gcma& a = an->automaton;
    const Partition& p = an->partition;
    TestabilityReport rep = is_one_locally_testable(a, p);
    AnchorTable anchors(a);
    auto cls = [&](const Word& w) { return p.class_of[anchors.anchor(w)]; };
    if (rep.one_lt) {
      if (auto bad = oracle_occurrence_condition(a, p, 5))
        return "formula " + f.str() + ": " + *bad;
      if (auto bad = oracle_stutter_condition(a, p, 5))
        return "formula " + f.str() + ": " + *bad;
    }
    if (rep.stutter) {
      Word uav = rep.stutter->u;
      uav.push_back(rep.stutter->letter);
      Word uaav = uav;
      uaav.push_back(rep.stutter->letter);
      uav.insert(uav.end(), rep.stutter->v.begin(), rep.stutter->v.end());
      uaav.insert(uaav.end(), rep.stutter->v.begin(), rep.stutter->v.end());
      if (cls(uav) == cls(uaav))
        return "formula " + f.str() + ": stutter counterexample does not split";
    } else if (auto bad = oracle_stutter_condition(a, p, 4)) {
      return "formula " + f.str() + ": missed stutter violation, " + *bad;
    }
    if (rep.swap) {
      Word uabv = rep.swap->u;
      Word ubav = rep.swap->u;
      uabv.push_back(rep.swap->a);
      uabv.push_back(rep.swap->b);
      ubav.push_back(rep.swap->b);
      ubav.push_back(rep.swap->a);
      uabv.insert(uabv.end(), rep.swap->v.begin(), rep.swap->v.end());
      ubav.insert(ubav.end(), rep.swap->v.begin(), rep.swap->v.end());
      if (cls(uabv) == cls(ubav))
        return "formula " + f.str() + ": swap counterexample does not split";
      if (rep.swap->u.empty()) {
        Partition pos = positive_congruence(a, p);
        if (pos.class_of[cls(uabv)] == pos.class_of[cls(ubav)])
          return "formula " + f.str() +
                 ": empty-context swap pair is only superficially distinct";
      }
    }
  }
  if (checked < 10) return "too few automata checked";
  return {};
}

Suite suite_verdicts(std::mt19937_64& rng) {
  Alphabet ab({"a", "b"});
  const Fragment fragments[] = {Fragment::X,  Fragment::F, Fragment::SF,
                                Fragment::XF, Fragment::U, Fragment::Full};
  for (Fragment fr : fragments)
    for (int i = 0; i < 5; ++i) {
      Formula f = random_fragment_formula(rng, ab, fr, 3);
      try {
        Verdict v = decide(f, fr, {});
        if (!v.expressible)
          return "fragment formula " + f.str() + " rejected for " +
                 fragment_name(fr);
      } catch (const LimitError&) {
      }
    }
  int certified = 0;
  for (int i = 0; i < 12; ++i) {
    Formula f = random_formula(rng, ab, 3);
    std::map<Fragment, Verdict> table;
    try {
      table = decide_all(f, {});
    } catch (const LimitError&) {
      continue;
    }
    for (const auto& [fr, v] : table) {
      if (v.expressible || !v.witness) continue;
      const WitnessPair& w = *v.witness;
      if (eval(f, w.w1) == eval(f, w.w2))
        return "witness words for " + f.str() + " agree under evaluation";
      if (fr == Fragment::U) {
        if (!stutter_equivalent(w.w1, w.w2))
          return "stutter witness for " + f.str() + " is not stutter close";
      } else if (auto ops = GameOperators::for_fragment(fr)) {
        if (!certify_indistinguishable(w, *ops, 6))
          return "witness for " + f.str() + " lost the " + ops->str() +
                 " game at depth 6";
        ++certified;
      }
    }
  }
  if (certified < 3) return "too few witnesses certified";
  return {};
}

Suite suite_corrupted_automaton() {
  Alphabet ab({"a", "b"});
  Formula f = parse("a R b", ab);
  Analysis an = analyze(f, {});
  if (oracle_anchor_unique(an.automaton, 3))
    return "intact automaton failed the anchor check";
  Gcma bad = an.automaton;
  for (int q = 0; q < bad.num_states; ++q) bad.delta[0][q] = q;
  if (!oracle_anchor_unique(bad, 2))
    return "corrupted transition table slipped past the anchor check";
  return {};
}

}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  bool all_ok = true;
  auto run = [&](const char* name, Suite result) {
    if (result.empty()) {
      out << name << ": ok\n";
    } else {
      out << name << ": FAIL, " << result << "\n";
      all_ok = false;
    }
  };
  run("acceptance matches direct evaluation", suite_acceptance_vs_eval(rng));
  run("congruence classes match the word definition",
      suite_congruence_definition(rng));
  run("anchors are unique and loop classes cover every word",
      suite_anchors_and_coverage(rng));
  run("closure checks agree with the bounded oracles",
      suite_closure_oracles(rng));
  run("verdicts are sound and witnesses certify", suite_verdicts(rng));
  run("a corrupted automaton is caught", suite_corrupted_automaton());
  return all_ok;
}

}  // namespace ltlfrag
