// This file is part of ltlfrag, a decision tool for operator fragments
// of linear-time temporal logic.
// SPDX-License-Identifier: MIT

#include "ltlfrag/formula_gen.hpp"

namespace ltlfrag {

namespace {

// Productions a generator may choose from. SF and SG stand for the
// strict operators X F and X G taken as one unit.
struct Productions {
  bool allow_not = false;
  bool x = false, f = false, g = false, u = false, r = false;
  bool sf = false, sg = false;
};

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Formula gen(std::mt19937_64& rng, const Alphabet& alphabet,
            const Productions& prod, int& budget, int depth) {
  Formula (*letter)(std::mt19937_64&, const Alphabet&) =
      [](std::mt19937_64& r, const Alphabet& a) {
        return Formula::Letter(a, rand_int(r, 0, a.size() - 1));
      };
  if (depth <= 0) return letter(rng, alphabet);

  enum Choice { CLetter, CNot, CAnd, COr, CX, CF, CG, CU, CR, CSF, CSG };
  std::vector<Choice> menu = {CLetter, CLetter, CAnd, COr};
  if (prod.allow_not) menu.push_back(CNot);
  if (budget >= 1) {
    if (prod.x) menu.push_back(CX);
    if (prod.f) menu.push_back(CF);
    if (prod.g) menu.push_back(CG);
    if (prod.u) menu.push_back(CU);
    if (prod.r) menu.push_back(CR);
  }
  if (budget >= 2) {
    if (prod.sf) menu.push_back(CSF);
    if (prod.sg) menu.push_back(CSG);
  }
  Choice c = menu[rand_int(rng, 0, static_cast<int>(menu.size()) - 1)];
  switch (c) {
    case CLetter:
      return letter(rng, alphabet);
    case CNot:
      return Formula::Not(gen(rng, alphabet, prod, budget, depth - 1));
    case CAnd: {
      Formula a = gen(rng, alphabet, prod, budget, depth - 1);
      Formula b = gen(rng, alphabet, prod, budget, depth - 1);
      return Formula::And(a, b);
    }
    case COr: {
      Formula a = gen(rng, alphabet, prod, budget, depth - 1);
      Formula b = gen(rng, alphabet, prod, budget, depth - 1);
      return Formula::Or(a, b);
    }
    case CX:
      --budget;
      return Formula::Next(gen(rng, alphabet, prod, budget, depth - 1));
    case CF:
      --budget;
      return Formula::Eventually(gen(rng, alphabet, prod, budget, depth - 1));
    case CG:
      --budget;
      return Formula::Always(gen(rng, alphabet, prod, budget, depth - 1));
    case CU: {
      --budget;
      Formula a = gen(rng, alphabet, prod, budget, depth - 1);
      Formula b = gen(rng, alphabet, prod, budget, depth - 1);
      return Formula::Until(a, b);
    }
    case CR: {
      --budget;
      Formula a = gen(rng, alphabet, prod, budget, depth - 1);
      Formula b = gen(rng, alphabet, prod, budget, depth - 1);
      return Formula::Release(a, b);
    }
    case CSF:
      budget -= 2;
      return Formula::Next(
          Formula::Eventually(gen(rng, alphabet, prod, budget, depth - 1)));
    case CSG:
      budget -= 2;
      return Formula::Next(
          Formula::Always(gen(rng, alphabet, prod, budget, depth - 1)));
  }
  return letter(rng, alphabet);
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const Alphabet& alphabet,
                       int max_temporal) {
  Productions prod;
  prod.allow_not = true;
  prod.x = prod.f = prod.g = prod.u = prod.r = true;
  int budget = max_temporal;
  return gen(rng, alphabet, prod, budget, 4);
}

Formula random_fragment_formula(std::mt19937_64& rng, const Alphabet& alphabet,
                                Fragment fragment, int max_temporal) {
  Productions prod;
  switch (fragment) {
    case Fragment::X:
      prod.x = true;
      break;
    case Fragment::F:
      prod.f = prod.g = true;
      break;
    case Fragment::SF:
      prod.sf = prod.sg = true;
      break;
    case Fragment::XF:
      prod.x = prod.f = prod.g = true;
      break;
    case Fragment::U:
      prod.u = prod.r = true;
      break;
    case Fragment::Full:
      prod.x = prod.f = prod.g = prod.u = prod.r = true;
      break;
  }
  int budget = max_temporal;
  return gen(rng, alphabet, prod, budget, 4);
}

}  // namespace ltlfrag
