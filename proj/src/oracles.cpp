// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/oracles.hpp"

#include <map>
#include <set>
#include <sstream>

namespace ltlfrag {

namespace {

// All words up to max_len, shortest first, letters ascending; the empty
// word comes first.
std::vector<Word> words_up_to(int letters, int max_len) {
  std::vector<Word> out = {Word{}};
  std::size_t layer_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (int l = 0; l < letters; ++l) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    layer_start = layer_end;
  }
  return out;
}

unsigned occurrence_mask(const Word& w) {
  unsigned m = 0;
  for (int l : w) m |= 1u << l;
  return m;
}

std::string letters_of_mask(const Alphabet& alpha, unsigned mask) {
  std::string out = "{";
  for (int l = 0; l < alpha.size(); ++l)
    if (mask & (1u << l)) {
      if (out.size() > 1) out += ",";
      out += alpha.letter(l);
    }
  return out + "}";
}

}  // namespace

std::optional<std::string> oracle_anchor_unique(const Gcma& a, int max_len) {
  for (const Word& w : words_up_to(a.alphabet.size(), max_len)) {
    if (w.empty()) continue;
    std::vector<int> loops = loop_states(a, w);
    if (loops.size() != 1) {
      std::ostringstream os;
      os << "word " << word_str(a.alphabet, w) << " has " << loops.size()
         << " loop states";
      return os.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> oracle_congruence(const Gcma& a, const Partition& p,
                                             int max_len) {
  int n = a.num_states;
  std::vector<char> separated(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::vector<int>> layer;
  std::vector<int> identity(n);
  for (int q = 0; q < n; ++q) identity[q] = q;
  layer.push_back(identity);
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& m : layer) {
      for (int q1 = 0; q1 < n; ++q1)
        for (int q2 = q1 + 1; q2 < n; ++q2)
          if (a.is_initial(m[q1]) != a.is_initial(m[q2]))
            separated[static_cast<std::size_t>(q1) * n + q2] = 1;
      if (len < max_len)
        for (int l = 0; l < a.alphabet.size(); ++l) {
          std::vector<int> composed(n);
          for (int q = 0; q < n; ++q) composed[q] = a.delta[l][m[q]];
          next.push_back(std::move(composed));
        }
    }
    layer = std::move(next);
  }
  for (int q1 = 0; q1 < n; ++q1)
    for (int q2 = q1 + 1; q2 < n; ++q2) {
      bool sep = separated[static_cast<std::size_t>(q1) * n + q2] != 0;
      bool same = p.class_of[q1] == p.class_of[q2];
      if (same == sep) {
        std::ostringstream os;
        os << "states " << q1 << " and " << q2 << " are "
           << (sep ? "separated by a word" : "not separated by any word")
           << " up to length " << max_len << " but the partition "
           << (same ? "joins" : "splits") << " them";
        return os.str();
      }
    }
  return std::nullopt;
}

std::optional<std::string> oracle_occurrence_condition(const Gcma& a,
                                                       const Partition& p,
                                                       int max_len) {
  Partition pos = positive_congruence(a, p);
  AnchorTable anchors(a);
  // occurrence mask -> (positive class of the anchor, first such word)
  std::map<unsigned, std::pair<int, Word>> by_occ;
  // (occurrence mask, first letter) -> (class of the anchor, first word)
  std::map<std::pair<unsigned, int>, std::pair<int, Word>> by_occ_first;
  for (const Word& w : words_up_to(a.alphabet.size(), max_len)) {
    if (w.empty()) continue;
    int cls = p.class_of[anchors.anchor(w)];
    unsigned mask = occurrence_mask(w);
    auto [it, fresh] = by_occ.try_emplace(mask, pos.class_of[cls], w);
    if (!fresh && it->second.first != pos.class_of[cls]) {
      std::ostringstream os;
      os << "words " << word_str(a.alphabet, it->second.second) << " and "
         << word_str(a.alphabet, w) << " share the letters "
         << letters_of_mask(a.alphabet, mask)
         << " but their anchors are not positively equivalent";
      return os.str();
    }
    auto key = std::make_pair(mask, w.front());
    auto [jt, fresh2] = by_occ_first.try_emplace(key, cls, w);
    if (!fresh2 && jt->second.first != cls) {
      std::ostringstream os;
      os << "words " << word_str(a.alphabet, jt->second.second) << " and "
         << word_str(a.alphabet, w) << " share the letters "
         << letters_of_mask(a.alphabet, mask)
         << " and their first letter, but their anchors are in classes "
         << jt->second.first << " and " << cls;
      return os.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> oracle_stutter_condition(const Gcma& a,
                                                    const Partition& p,
                                                    int max_len) {
  AnchorTable anchors(a);
  for (const Word& w : words_up_to(a.alphabet.size(), max_len)) {
    if (w.empty()) continue;
    int cls = p.class_of[anchors.anchor(w)];
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word doubled = w;
      doubled.insert(doubled.begin() + static_cast<long>(i), w[i]);
      int cls2 = p.class_of[anchors.anchor(doubled)];
      if (cls != cls2) {
        std::ostringstream os;
        os << "duplicating position " << i << " of " << word_str(a.alphabet, w)
           << " moves the anchor from class " << cls << " to class " << cls2;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<int> oracle_locally_testable(const Dfa& d, int max_k,
                                           int max_len) {
  std::vector<Word> words = words_up_to(d.num_letters, max_len);
  for (int k = 1; k <= max_k; ++k) {
    // profile -> membership of the first word seen with it
    std::map<std::string, bool> seen;
    bool mismatch = false;
    for (const Word& w : words) {
      if (w.empty()) continue;
      std::ostringstream key;
      int edge = std::min<int>(k - 1, static_cast<int>(w.size()));
      for (int i = 0; i < edge; ++i) key << w[i] << ".";
      key << "|";
      for (std::size_t i = w.size() - edge; i < w.size(); ++i)
        key << w[i] << ".";
      key << "|";
      std::set<std::string> infixes;
      if (static_cast<int>(w.size()) >= k)
        for (std::size_t i = 0; i + k <= w.size(); ++i) {
          std::string f;
          for (int j = 0; j < k; ++j) f += std::to_string(w[i + j]) + ".";
          infixes.insert(f);
        }
      for (const std::string& f : infixes) key << f << ";";
      auto [it, fresh] = seen.try_emplace(key.str(), d.accepts_word(w));
      if (!fresh && it->second != d.accepts_word(w)) {
        mismatch = true;
        break;
      }
    }
    if (!mismatch) return k;
  }
  return std::nullopt;
}

}  // namespace ltlfrag
