// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ltlfrag/formula_gen.hpp"
#include "ltlfrag/looplang.hpp"

using namespace ltlfrag;

namespace {

Alphabet ab() { return Alphabet::parse("a,b"); }

Gcma build_trim(const char* text) {
  Alphabet a = ab();
  return trim(build_gcma(to_nnf(parse(text, a))));
}

// Loop DFAs read reversed words.
bool in_loop_lang(const Dfa& d, const Alphabet& al, const char* text) {
  Word w = parse_word(al, text);
  std::reverse(w.begin(), w.end());
  return d.accepts_word(w);
}

Dfa make_dfa(int letters, std::vector<std::vector<int>> delta, int start,
             std::vector<int> accepting) {
  Dfa d;
  d.num_letters = letters;
  d.num_states = static_cast<int>(delta[0].size());
  d.start = start;
  d.delta = std::move(delta);
  d.accepting.assign(d.num_states, 0);
  for (int q : accepting) d.accepting[q] = 1;
  return d;
}

// (ab)+ over {a, b}: 0 start, 1 after a, 2 accept, 3 sink.
Dfa dfa_ab_plus() {
  return make_dfa(2, {{1, 3, 1, 3}, {3, 2, 3, 3}}, 0, {2});
}

// (aa)+ over {a, b}: 0 start, 1 odd, 2 even, 3 sink.
Dfa dfa_aa_plus() {
  return make_dfa(2, {{1, 2, 1, 3}, {3, 3, 3, 3}}, 0, {2});
}

// b+ over {a, b}: 0 start, 1 accept, 2 sink.
Dfa dfa_b_plus() { return make_dfa(2, {{2, 2, 2}, {1, 1, 2}}, 0, {1}); }

// Words containing a: 0 no a yet, 1 accept.
Dfa dfa_contains_a() { return make_dfa(2, {{1, 1}, {0, 1}}, 0, {1}); }

// aA*: 0 start, 1 accept, 2 sink.
Dfa dfa_a_first() { return make_dfa(2, {{1, 1, 2}, {2, 1, 2}}, 0, {1}); }

std::vector<Word> all_words(int letters, int max_len) {
  std::vector<Word> out = {{}};
  size_t layer = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = layer; i < end; ++i)
      for (int l = 0; l < letters; ++l) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    layer = end;
  }
  return out;
}

Word splice(const Word& u, const Word& mid, const Word& v) {
  Word w = u;
  w.insert(w.end(), mid.begin(), mid.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// Smallest |u| + |v| of a stutter violation up to the bound, or -1.
int bounded_stutter_min(const Gcma& g, const Partition& p, int max_len) {
  auto words = all_words(g.alphabet.size(), max_len);
  int best = -1;
  for (const Word& u : words)
    for (const Word& v : words) {
      int len = static_cast<int>(u.size() + v.size());
      if (len > max_len) continue;
      if (best >= 0 && len >= best) continue;
      for (int l = 0; l < g.alphabet.size(); ++l) {
        Word w1 = splice(u, {l}, v);
        Word w2 = splice(u, {l, l}, v);
        if (p.class_of[anchor(g, w1)] != p.class_of[anchor(g, w2)]) {
          best = len;
          break;
        }
      }
    }
  return best;
}

// Smallest |u| + |v| of a swap violation up to the bound, or -1.
int bounded_swap_min(const Gcma& g, const Partition& p, const Partition& pos,
                     bool strict, int max_len) {
  auto words = all_words(g.alphabet.size(), max_len);
  int best = -1;
  for (const Word& u : words)
    for (const Word& v : words) {
      int len = static_cast<int>(u.size() + v.size());
      if (len > max_len) continue;
      if (best >= 0 && len >= best) continue;
      for (int la = 0; la < g.alphabet.size(); ++la)
        for (int lb = 0; lb < g.alphabet.size(); ++lb) {
          if (la == lb) continue;
          int c1 = p.class_of[anchor(g, splice(u, {la, lb}, v))];
          int c2 = p.class_of[anchor(g, splice(u, {lb, la}, v))];
          if (c1 == c2) continue;
          if (!strict && u.empty() && pos.class_of[c1] == pos.class_of[c2])
            continue;
          best = len;
        }
    }
  return best;
}

void require_stutter_hit(const Gcma& g, const Partition& p,
                         const StutterCounterexample& cx) {
  Word w1 = splice(cx.u, {cx.letter}, cx.v);
  Word w2 = splice(cx.u, {cx.letter, cx.letter}, cx.v);
  CHECK(p.class_of[anchor(g, w1)] != p.class_of[anchor(g, w2)]);
}

void require_swap_hit(const Gcma& g, const Partition& p, const Partition& pos,
                      const SwapCounterexample& cx, bool strict) {
  int c1 = p.class_of[anchor(g, splice(cx.u, {cx.a, cx.b}, cx.v))];
  int c2 = p.class_of[anchor(g, splice(cx.u, {cx.b, cx.a}, cx.v))];
  CHECK(c1 != c2);
  if (!strict && cx.u.empty()) CHECK(pos.class_of[c1] != pos.class_of[c2]);
}

}  // namespace

TEST_CASE("loop dfa matches the loop state relation") {
  Alphabet al = ab();
  std::vector<Gcma> automata = {build_trim("a R b"), build_trim("F a"),
                                build_trim("X b")};
  std::mt19937_64 rng(1801);
  for (int it = 0; it < 10; ++it) {
    Gcma g = trim(build_gcma(to_nnf(random_formula(rng, al, 2))));
    if (g.num_states > 0) automata.push_back(std::move(g));
  }
  auto words = all_words(2, 4);
  for (const Gcma& g : automata)
    for (int q = 0; q < g.num_states; ++q) {
      Dfa d = loop_dfa(g, q);
      for (const Word& w : words) {
        if (w.empty()) continue;
        Word rev(w.rbegin(), w.rend());
        auto loops = loop_states(g, w);
        bool expected = std::binary_search(loops.begin(), loops.end(), q);
        CHECK(d.accepts_word(rev) == expected);
      }
    }
}

TEST_CASE("loop languages of a R b") {
  Alphabet al = ab();
  Gcma g = build_trim("a R b");
  REQUIRE(g.state_sets == std::vector<unsigned>{1, 2, 6});

  Dfa d0 = loop_dfa(g, 0);
  for (const char* w : {"a", "ab", "abba"}) CHECK(in_loop_lang(d0, al, w));
  for (const char* w : {"b", "bb", "ba", "bab"})
    CHECK_FALSE(in_loop_lang(d0, al, w));

  Dfa d1 = loop_dfa(g, 1);
  for (const char* w : {"ba", "bba", "bab"}) CHECK(in_loop_lang(d1, al, w));
  for (const char* w : {"b", "bb", "ab", "a"})
    CHECK_FALSE(in_loop_lang(d1, al, w));

  Dfa d2 = loop_dfa(g, 2);
  for (const char* w : {"b", "bb", "bbb"}) CHECK(in_loop_lang(d2, al, w));
  for (const char* w : {"a", "ba", "ab", "bab"})
    CHECK_FALSE(in_loop_lang(d2, al, w));

  Partition p = left_congruence(g);
  REQUIRE(p.num_classes == 2);
  Dfa c0 = loop_language(g, p, 0);
  for (const char* w : {"a", "ba", "ab", "bba", "aab"})
    CHECK(in_loop_lang(c0, al, w));
  for (const char* w : {"b", "bb", "bbb"}) CHECK_FALSE(in_loop_lang(c0, al, w));
  Dfa c1 = loop_language(g, p, 1);
  for (const char* w : {"b", "bb"}) CHECK(in_loop_lang(c1, al, w));
  for (const char* w : {"a", "ba", "ab"}) CHECK_FALSE(in_loop_lang(c1, al, w));
}

TEST_CASE("loop languages of X b") {
  Alphabet al = ab();
  Gcma g = build_trim("X b");
  REQUIRE(g.state_sets == std::vector<unsigned>{0, 1, 2, 3});

  Dfa d0 = loop_dfa(g, 0);
  for (const char* w : {"a", "aa", "aab", "aaba"}) CHECK(in_loop_lang(d0, al, w));
  for (const char* w : {"ab", "b", "ba"}) CHECK_FALSE(in_loop_lang(d0, al, w));

  Dfa d1 = loop_dfa(g, 1);
  for (const char* w : {"ba", "bab", "baa"}) CHECK(in_loop_lang(d1, al, w));
  for (const char* w : {"b", "bb", "ab", "a"})
    CHECK_FALSE(in_loop_lang(d1, al, w));

  Dfa d2 = loop_dfa(g, 2);
  for (const char* w : {"ab", "aba", "abb"}) CHECK(in_loop_lang(d2, al, w));
  for (const char* w : {"a", "aa", "ba"}) CHECK_FALSE(in_loop_lang(d2, al, w));

  Dfa d3 = loop_dfa(g, 3);
  for (const char* w : {"b", "bb", "bba"}) CHECK(in_loop_lang(d3, al, w));
  for (const char* w : {"ba", "ab", "a"}) CHECK_FALSE(in_loop_lang(d3, al, w));
}

TEST_CASE("stutter closure on the worked automata") {
  Gcma grb = build_trim("a R b");
  CHECK_FALSE(check_stutter_closure(grb, left_congruence(grb)));

  Gcma gfa = build_trim("F a");
  CHECK_FALSE(check_stutter_closure(gfa, left_congruence(gfa)));

  Gcma ga = build_trim("a");
  CHECK_FALSE(check_stutter_closure(ga, left_congruence(ga)));

  Gcma gxb = build_trim("X b");
  Partition p = left_congruence(gxb);
  auto cx = check_stutter_closure(gxb, p);
  REQUIRE(cx);
  CHECK(cx->u.empty());
  CHECK(cx->letter == 1);
  CHECK(cx->v == Word{0});
  require_stutter_hit(gxb, p, *cx);
}

TEST_CASE("swap closure on the worked automata") {
  Gcma grb = build_trim("a R b");
  Partition prb = left_congruence(grb);
  CHECK_FALSE(check_swap_closure(grb, prb, false));
  CHECK_FALSE(check_swap_closure(grb, prb, true));

  Gcma gxb = build_trim("X b");
  Partition pxb = left_congruence(gxb);
  Partition pos = positive_congruence(gxb, pxb);
  for (bool strict : {false, true}) {
    auto cx = check_swap_closure(gxb, pxb, strict);
    REQUIRE(cx);
    CHECK(cx->u.empty());
    CHECK(cx->a == 1);
    CHECK(cx->b == 0);
    CHECK(cx->v.empty());
    require_swap_hit(gxb, pxb, pos, *cx, strict);
  }

  // A difference visible only at the empty context: the anchors of a-first
  // and b-first words agree on every nonempty continuation.
  Gcma ga = build_trim("a");
  Partition pa = left_congruence(ga);
  CHECK_FALSE(check_swap_closure(ga, pa, false));
  auto strict_hit = check_swap_closure(ga, pa, true);
  REQUIRE(strict_hit);
  CHECK(strict_hit->u.empty());
  CHECK(strict_hit->a == 1);
  CHECK(strict_hit->b == 0);
  CHECK(strict_hit->v.empty());
}

TEST_CASE("one local testability report") {
  Gcma grb = build_trim("a R b");
  CHECK(is_one_locally_testable(grb, left_congruence(grb)).one_lt);
  Gcma gfa = build_trim("F a");
  CHECK(is_one_locally_testable(gfa, left_congruence(gfa)).one_lt);
  Gcma ga = build_trim("a");
  TestabilityReport ra = is_one_locally_testable(ga, left_congruence(ga));
  CHECK(ra.one_lt);
  CHECK_FALSE(ra.stutter);
  CHECK_FALSE(ra.swap);

  Gcma gxb = build_trim("X b");
  TestabilityReport rxb = is_one_locally_testable(gxb, left_congruence(gxb));
  CHECK_FALSE(rxb.one_lt);
  CHECK(rxb.stutter);
  CHECK(rxb.swap);
}

TEST_CASE("per class local testability of the worked automata") {
  for (const char* text : {"a R b", "F a", "X b", "a"}) {
    Gcma g = build_trim(text);
    Partition p = left_congruence(g);
    for (int c = 0; c < p.num_classes; ++c)
      CHECK(is_locally_testable(g, p, c));
  }
}

TEST_CASE("minimize merges equivalent states and keeps the language") {
  // Contains-a with two redundant copies of the accepting state.
  Dfa padded = make_dfa(2, {{1, 2, 3, 1}, {0, 3, 1, 2}}, 0, {1, 2, 3});
  Dfa m = minimize(padded);
  CHECK(m.num_states == 2);
  auto words = all_words(2, 5);
  for (const Word& w : words)
    CHECK(m.accepts_word(w) == padded.accepts_word(w));

  CHECK(minimize(dfa_ab_plus()).num_states == 4);
  CHECK(minimize(dfa_b_plus()).num_states == 3);
}

TEST_CASE("transition semigroup classifications") {
  Semigroup sb = transition_semigroup(minimize(dfa_b_plus()));
  CHECK(sb.size == 2);
  CHECK(dfa_occurrence_determined(dfa_b_plus()));
  CHECK(dfa_stutter_invariant(dfa_b_plus()));
  CHECK(dfa_locally_testable(dfa_b_plus()));

  CHECK(dfa_occurrence_determined(dfa_contains_a()));
  CHECK(dfa_stutter_invariant(dfa_contains_a()));
  CHECK(dfa_locally_testable(dfa_contains_a()));

  // aA* is locally testable and stutter invariant, but membership is not
  // a function of the occurrence set.
  Semigroup sa = transition_semigroup(minimize(dfa_a_first()));
  CHECK(sa.size == 2);
  int ea = sa.letter_element[0];
  int eb = sa.letter_element[1];
  CHECK(sa.idempotent(ea));
  CHECK(sa.idempotent(eb));
  CHECK(sa.product[ea][eb] != sa.product[eb][ea]);
  CHECK(dfa_locally_testable(dfa_a_first()));
  CHECK(dfa_stutter_invariant(dfa_a_first()));
  CHECK_FALSE(dfa_occurrence_determined(dfa_a_first()));

  Semigroup sab = transition_semigroup(minimize(dfa_ab_plus()));
  CHECK(sab.size == 5);
  CHECK(dfa_locally_testable(dfa_ab_plus()));
  CHECK_FALSE(dfa_stutter_invariant(dfa_ab_plus()));
  CHECK_FALSE(dfa_occurrence_determined(dfa_ab_plus()));

  Semigroup saa = transition_semigroup(minimize(dfa_aa_plus()));
  CHECK(saa.size == 3);
  CHECK_FALSE(dfa_locally_testable(dfa_aa_plus()));
  CHECK_FALSE(dfa_stutter_invariant(dfa_aa_plus()));
  CHECK_FALSE(dfa_occurrence_determined(dfa_aa_plus()));
}

TEST_CASE("semigroup size limit raises") {
  CHECK_THROWS_AS(transition_semigroup(dfa_ab_plus(), 2), LimitError);
}

TEST_CASE("closure checks agree with bounded search and class invariants") {
  Alphabet al = ab();
  std::mt19937_64 rng(909);
  int done = 0;
  for (int it = 0; it < 60 && done < 25; ++it) {
    Gcma g = trim(build_gcma(to_nnf(random_formula(rng, al, 2))));
    if (g.num_states == 0) continue;
    try {
      Partition p = left_congruence(g);
      Partition pos = positive_congruence(g, p);

      auto stut = check_stutter_closure(g, p);
      if (stut) {
        require_stutter_hit(g, p, *stut);
        int len = static_cast<int>(stut->u.size() + stut->v.size());
        if (len <= 4) CHECK(bounded_stutter_min(g, p, len) == len);
      } else {
        CHECK(bounded_stutter_min(g, p, 3) == -1);
      }

      for (bool strict : {false, true}) {
        auto sw = check_swap_closure(g, p, strict);
        if (sw) {
          require_swap_hit(g, p, pos, *sw, strict);
          int len = static_cast<int>(sw->u.size() + sw->v.size());
          if (len <= 4) CHECK(bounded_swap_min(g, p, pos, strict, len) == len);
        } else {
          CHECK(bounded_swap_min(g, p, pos, strict, 3) == -1);
        }
      }

      bool stutter_clean = !stut;
      bool per_class_stutter = true;
      for (int c = 0; c < p.num_classes; ++c)
        if (!dfa_stutter_invariant(loop_language(g, p, c)))
          per_class_stutter = false;
      CHECK(stutter_clean == per_class_stutter);

      bool strict_one_lt = stutter_clean && !check_swap_closure(g, p, true);
      bool per_class_occurrence = true;
      for (int c = 0; c < p.num_classes; ++c)
        if (!dfa_occurrence_determined(loop_language(g, p, c)))
          per_class_occurrence = false;
      CHECK(strict_one_lt == per_class_occurrence);
      ++done;
    } catch (const LimitError&) {
      continue;
    }
  }
  CHECK(done >= 20);
}
