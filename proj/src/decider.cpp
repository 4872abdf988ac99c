// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/decider.hpp"

#include <sstream>

namespace ltlfrag {

namespace {

Reason pattern_reason(const Alphabet& alpha, const PatternHit& hit) {
  std::ostringstream os;
  switch (hit.id) {
    case PatternId::T1:
      os << "word " << word_str(alpha, hit.x) << " fixes the distinct classes "
         << hit.p << " and " << hit.q;
      break;
    case PatternId::T2:
      os << "letter " << alpha.letter(hit.letter) << " maps the cycle classes "
         << hit.r << " and " << hit.s << " to the distinct classes " << hit.p
         << " and " << hit.q;
      break;
    case PatternId::T3:
      os << "letter " << alpha.letter(hit.letter)
         << " is not idempotent on class " << hit.r
         << ": one application reaches class " << hit.q << ", two reach class "
         << hit.p;
      break;
    case PatternId::T4:
      os << "word " << word_str(alpha, hit.z) << " fixes the distinct classes "
         << hit.p << " and " << hit.q << " inside one cycle";
      break;
  }
  return {pattern_name(hit.id), os.str(), hit};
}

Word splice(const Word& u, const Word& mid, const Word& v) {
  Word w = u;
  w.insert(w.end(), mid.begin(), mid.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Reason stutter_reason(const Alphabet& alpha, const StutterCounterexample& c) {
  std::ostringstream os;
  os << "duplicating " << alpha.letter(c.letter)
     << " moves the anchor class: "
     << word_str(alpha, splice(c.u, {c.letter}, c.v)) << " vs "
     << word_str(alpha, splice(c.u, {c.letter, c.letter}, c.v));
  return {"stutter-closure", os.str(), std::nullopt};
}

Reason swap_reason(const Alphabet& alpha, const SwapCounterexample& c) {
  std::ostringstream os;
  os << "swapping adjacent " << alpha.letter(c.a) << " and "
     << alpha.letter(c.b) << " moves the anchor class: "
     << word_str(alpha, splice(c.u, {c.a, c.b}, c.v)) << " vs "
     << word_str(alpha, splice(c.u, {c.b, c.a}, c.v));
  return {"swap-closure", os.str(), std::nullopt};
}

Reason testability_reason(int class_id) {
  std::ostringstream os;
  os << "the loop language of class " << class_id
     << " is not locally testable";
  return {"local-testability", os.str(), std::nullopt};
}

}  // namespace

Analysis analyze(const Formula& f, const DecideOptions& opts) {
  Analysis an;
  an.nnf = to_nnf(f);
  an.automaton = trim(build_gcma(an.nnf, opts.max_sub));
  an.empty_language = language_empty(an.automaton);
  an.partition = left_congruence(an.automaton);
  an.quot = quotient(an.automaton, an.partition);
  return an;
}

Verdict decide(const Analysis& an, Fragment fragment,
               const DecideOptions& opts) {
  Verdict v;
  v.fragment = fragment;
  v.stats.states = an.automaton.num_states;
  v.stats.classes = an.partition.num_classes;
  v.stats.final_sets = static_cast<int>(an.automaton.final_sets.size());
  if (an.empty_language) {
    v.expressible = true;
    v.notes.push_back("the language is empty; every fragment expresses it");
    return v;
  }
  if (fragment == Fragment::Full) {
    v.expressible = true;
    v.notes.push_back("the full operator set covers every input formula");
    return v;
  }

  const Gcma& a = an.automaton;
  const QuotientAutomaton& qa = an.quot;
  auto done = [&] { return !v.reasons.empty() && !opts.all_reasons; };
  auto add_hit = [&](const std::optional<PatternHit>& hit) {
    if (hit) v.reasons.push_back(pattern_reason(a.alphabet, *hit));
  };

  switch (fragment) {
    case Fragment::X:
      add_hit(find_t1(qa));
      break;
    case Fragment::F:
    case Fragment::SF: {
      add_hit(find_t2(qa));
      if (fragment == Fragment::F && !done()) add_hit(find_t3(qa));
      if (!done()) {
        TestabilityReport rep = is_one_locally_testable(a, an.partition);
        if (rep.stutter)
          v.reasons.push_back(stutter_reason(a.alphabet, *rep.stutter));
        if (rep.swap && !done())
          v.reasons.push_back(swap_reason(a.alphabet, *rep.swap));
      }
      break;
    }
    case Fragment::XF: {
      add_hit(find_t4(qa));
      for (int c = 0; c < an.partition.num_classes && !done(); ++c)
        if (!is_locally_testable(a, an.partition, c, opts.max_semigroup))
          v.reasons.push_back(testability_reason(c));
      break;
    }
    case Fragment::U: {
      add_hit(find_t3(qa));
      if (!done()) {
        if (auto c = check_stutter_closure(a, an.partition))
          v.reasons.push_back(stutter_reason(a.alphabet, *c));
      }
      v.notes.push_back(
          "temporal-logic definability holds for every formula input");
      break;
    }
    case Fragment::Full:
      break;
  }

  v.expressible = v.reasons.empty();
  if (!v.expressible && opts.want_witness) {
    for (const Reason& r : v.reasons) {
      if (!r.hit) continue;
      try {
        v.witness = witness(a, qa, *r.hit, opts.pump);
      } catch (const Error&) {
      }
      break;
    }
  }
  return v;
}

Verdict decide(const Formula& f, Fragment fragment,
               const DecideOptions& opts) {
  return decide(analyze(f, opts), fragment, opts);
}

std::map<Fragment, Verdict> decide_all(const Formula& f,
                                       const DecideOptions& opts) {
  Analysis an = analyze(f, opts);
  std::map<Fragment, Verdict> out;
  for (Fragment fr : {Fragment::X, Fragment::F, Fragment::SF, Fragment::XF,
                      Fragment::U})
    out.emplace(fr, decide(an, fr, opts));
  auto yes = [&](Fragment fr) { return out.at(fr).expressible; };
  auto contained = [&](Fragment lo, Fragment hi) {
    if (yes(lo) && !yes(hi))
      throw Error("fragment containment violated: " + fragment_name(lo) +
                  " is expressible but " + fragment_name(hi) + " is not");
  };
  contained(Fragment::F, Fragment::SF);
  contained(Fragment::F, Fragment::U);
  contained(Fragment::F, Fragment::XF);
  contained(Fragment::SF, Fragment::XF);
  contained(Fragment::X, Fragment::XF);
  return out;
}

}  // namespace ltlfrag
