// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltlfrag/decider.hpp"
#include "ltlfrag/efgame.hpp"
#include "ltlfrag/export.hpp"
#include "ltlfrag/selftest.hpp"

namespace {

using namespace ltlfrag;

struct Inputs {
  Alphabet alphabet;
  // (source text, parsed formula)
  std::vector<std::pair<std::string, Formula>> formulas;
};

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// A formula file holds one formula per line, # comments, and an optional
// leading "alphabet: a,b" header that --alphabet overrides.
Inputs load_inputs(const std::string& alphabet_spec,
                   const std::string& formula_text,
                   const std::string& file_path) {
  if (!formula_text.empty() && !file_path.empty())
    throw Error("give --formula or --file, not both");
  std::vector<std::string> texts;
  std::string header;
  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in) throw Error("cannot open " + file_path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      std::string s = strip(line);
      if (s.empty()) continue;
      if (first && s.rfind("alphabet:", 0) == 0) {
        header = s.substr(9);
        first = false;
        continue;
      }
      first = false;
      texts.push_back(s);
    }
    if (texts.empty()) throw Error(file_path + " contains no formula");
  } else if (!formula_text.empty()) {
    texts.push_back(formula_text);
  } else {
    throw Error("give --formula or --file");
  }
  std::string letters = !alphabet_spec.empty() ? alphabet_spec : header;
  if (letters.empty()) throw Error("no alphabet: use --alphabet or a header");
  Inputs in;
  in.alphabet = Alphabet::parse(letters);
  for (const std::string& t : texts) in.formulas.emplace_back(t, parse(t, in.alphabet));
  return in;
}

std::vector<Verdict> fragment_rows(const Analysis& an,
                                   const std::string& fragment_spec,
                                   const DecideOptions& opts) {
  if (!fragment_spec.empty())
    return {decide(an, parse_fragment(fragment_spec), opts)};
  std::vector<Verdict> out;
  for (Fragment fr : {Fragment::X, Fragment::F, Fragment::SF, Fragment::XF,
                      Fragment::U})
    out.push_back(decide(an, fr, opts));
  return out;
}

void print_text_verdict(const Verdict& v, std::ostream& out) {
  out << "fragment " << fragment_name(v.fragment) << ": "
      << (v.expressible ? "expressible" : "not expressible") << "\n";
  for (const Reason& r : v.reasons)
    out << "  reason " << r.kind << ": " << r.detail << "\n";
  for (const std::string& n : v.notes) out << "  note: " << n << "\n";
  if (v.witness)
    out << "  witness: " << v.witness->w1.str() << " vs " << v.witness->w2.str()
        << " [" << witness_relation_name(v.witness->relation) << ", pump "
        << v.witness->pump << "]\n";
  out << "  automaton: " << v.stats.states << " states, " << v.stats.classes
      << " classes, " << v.stats.final_sets << " final sets\n";
}

int cmd_check(const Inputs& in, const std::string& fragment_spec,
              const DecideOptions& opts, const std::string& emit) {
  bool all_expressible = true;
  ordered_json reports = ordered_json::array();
  for (const auto& [text, f] : in.formulas) {
    Analysis an = analyze(f, opts);
    std::vector<Verdict> rows = fragment_rows(an, fragment_spec, opts);
    for (const Verdict& v : rows)
      all_expressible = all_expressible && v.expressible;
    if (emit == "text") {
      std::cout << "formula: " << text << "\n";
      for (const Verdict& v : rows) print_text_verdict(v, std::cout);
      continue;
    }
    ordered_json report;
    report["formula"] = text;
    report["alphabet"] = in.alphabet.letters();
    if (rows.size() == 1) {
      ordered_json row = json_of_verdict(rows[0]);
      for (auto& [key, value] : row.items()) report[key] = value;
    } else {
      ordered_json verdicts = ordered_json::array();
      for (const Verdict& v : rows) verdicts.push_back(json_of_verdict(v));
      report["verdicts"] = verdicts;
    }
    reports.push_back(report);
  }
  if (emit != "text")
    std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_expressible ? 0 : 1;
}

int cmd_show(const Inputs& in, bool show_quotient, const std::string& emit,
             const DecideOptions& opts) {
  if (in.formulas.size() != 1) throw Error("show takes exactly one formula");
  Analysis an = analyze(in.formulas[0].second, opts);
  if (show_quotient) {
    if (emit == "json")
      std::cout << json_of_quotient(an.quot).dump(2) << "\n";
    else
      std::cout << dot_of_quotient(an.quot);
  } else {
    if (emit == "json")
      std::cout << json_of_gcma(an.automaton).dump(2) << "\n";
    else
      std::cout << dot_of_gcma(an.automaton);
  }
  return 0;
}

int cmd_witness(const Inputs& in, const std::string& fragment_spec,
                const DecideOptions& opts) {
  if (in.formulas.size() != 1) throw Error("witness takes exactly one formula");
  Verdict v = decide(analyze(in.formulas[0].second, opts),
                     parse_fragment(fragment_spec), opts);
  ordered_json out;
  out["formula"] = in.formulas[0].first;
  out["alphabet"] = in.alphabet.letters();
  out["fragment"] = fragment_name(v.fragment);
  out["expressible"] = v.expressible;
  if (v.witness)
    out["witness"] = json_of_witness(v.witness->w1.alphabet(), *v.witness);
  else
    out["witness"] = nullptr;
  std::cout << out.dump(2) << "\n";
  return v.expressible ? 0 : 1;
}

int cmd_efgame(const std::string& alphabet_spec, const std::string& w1_text,
               const std::string& w2_text, const std::string& ops_text,
               int depth) {
  Alphabet alpha = Alphabet::parse(alphabet_spec);
  UPWord w1 = UPWord::parse(alpha, w1_text);
  UPWord w2 = UPWord::parse(alpha, w2_text);
  GameOperators ops = GameOperators::parse(ops_text);
  bool spoiler = spoiler_wins(w1, w2, ops, depth);
  ordered_json out;
  out["w1"] = w1.str();
  out["w2"] = w2.str();
  out["operators"] = ops.str();
  out["depth"] = depth;
  out["spoiler_wins"] = spoiler;
  ordered_json moves = ordered_json::array();
  if (spoiler)
    for (const GameMove& m : spoiler_strategy(w1, w2, ops, depth)) {
      ordered_json move;
      move["op"] = std::string(1, m.op);
      move["side"] = m.side;
      move["pos1"] = m.pos1;
      move["pos2"] = m.pos2;
      moves.push_back(move);
    }
  out["strategy"] = moves;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides operator fragments of linear-time temporal logic"};
  app.require_subcommand(1);

  std::string alphabet_spec, formula_text, file_path, fragment_spec;
  std::string emit_check = "json", emit_show = "dot";
  DecideOptions opts;
  bool show_quotient = false;
  std::string w1_text, w2_text, ops_text = "X,F";
  std::uint64_t seed = 12345;

  CLI::App* check = app.add_subcommand(
      "check", "decide whether a formula is expressible in a fragment");
  check->add_option("--alphabet", alphabet_spec, "comma-separated letters");
  check->add_option("--formula", formula_text, "formula text");
  check->add_option("--file", file_path, "formula file, one per line");
  check->add_option("--fragment", fragment_spec,
                    "X, F, SF, XF, U, full, or an operator list; "
                    "default: all fragments");
  check->add_option("--emit", emit_check, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_flag("--all-reasons", opts.all_reasons,
                  "report every failing check, not just the first");
  check->add_option("--max-sub", opts.max_sub, "subformula limit");
  check->add_option("--max-semigroup", opts.max_semigroup,
                    "semigroup size limit");
  check->add_option("--game-depth", opts.game_depth, "game rounds");

  CLI::App* show = app.add_subcommand(
      "show", "print the automaton or its quotient");
  show->add_option("--alphabet", alphabet_spec, "comma-separated letters");
  show->add_option("--formula", formula_text, "formula text");
  show->add_option("--file", file_path, "formula file");
  show->add_flag("--quotient", show_quotient, "show the quotient");
  show->add_option("--emit", emit_show, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  show->add_option("--max-sub", opts.max_sub, "subformula limit");

  CLI::App* witness = app.add_subcommand(
      "witness", "produce a distinguishing word pair for a fragment");
  witness->add_option("--alphabet", alphabet_spec, "comma-separated letters");
  witness->add_option("--formula", formula_text, "formula text");
  witness->add_option("--file", file_path, "formula file");
  witness->add_option("--fragment", fragment_spec, "fragment to separate from")
      ->required();
  witness->add_option("--max-sub", opts.max_sub, "subformula limit");
  witness->add_option("--max-semigroup", opts.max_semigroup,
                      "semigroup size limit");

  CLI::App* efgame = app.add_subcommand(
      "efgame", "play the distinguishing game on two ultimately periodic words");
  efgame->add_option("--alphabet", alphabet_spec, "comma-separated letters")
      ->required();
  efgame->add_option("--w1", w1_text, "first word, stem(loop)")->required();
  efgame->add_option("--w2", w2_text, "second word, stem(loop)")->required();
  efgame->add_option("--operators", ops_text, "round types, e.g. X,F or SF");
  efgame->add_option("--game-depth", opts.game_depth, "game rounds");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the randomized cross-check suites");
  selftest->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return cmd_check(load_inputs(alphabet_spec, formula_text, file_path),
                       fragment_spec, opts, emit_check);
    if (show->parsed())
      return cmd_show(load_inputs(alphabet_spec, formula_text, file_path),
                      show_quotient, emit_show, opts);
    if (witness->parsed())
      return cmd_witness(load_inputs(alphabet_spec, formula_text, file_path),
                         fragment_spec, opts);
    if (efgame->parsed())
      return cmd_efgame(alphabet_spec, w1_text, w2_text, ops_text,
                        opts.game_depth);
    if (selftest->parsed())
      return run_selftest(seed, std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
