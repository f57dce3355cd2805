#pragma once

// Seeded random formulas for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "specdens/eqlogic.hpp"

namespace specdens::testgen {

class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed, std::size_t max_vars = 6, int max_depth = 4)
      : rng_(seed), max_vars_(max_vars), max_depth_(max_depth) {}

  eqlogic::Formula next() {
    std::uniform_int_distribution<std::size_t> nv(1, max_vars_);
    pool_.clear();
    for (std::size_t i = 0, n = nv(rng_); i < n; ++i) {
      pool_.push_back(eqlogic::Var::intern("v" + std::to_string(i)));
    }
    return node(0);
  }

 private:
  eqlogic::Formula atom() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    return eqlogic::Formula::eq(pool_[pick(rng_)], pool_[pick(rng_)]);
  }

  eqlogic::Formula node(int depth) {
    std::uniform_int_distribution<int> kind(0, depth >= max_depth_ ? 0 : 9);
    int k = kind(rng_);
    if (k <= 3) return atom();
    if (k == 4) return eqlogic::Formula::neg(node(depth + 1));
    if (k == 5) {
      std::vector<eqlogic::Var> vs = pool_;
      std::shuffle(vs.begin(), vs.end(), rng_);
      vs.erase(vs.begin() + std::min<std::size_t>(vs.size(), 1 + rng_() % 4), vs.end());
      return eqlogic::Formula::distinct(vs);
    }
    std::uniform_int_distribution<int> width(2, 3);
    std::vector<eqlogic::Formula> kids;
    for (int i = 0, w = width(rng_); i < w; ++i) kids.push_back(node(depth + 1));
    return k <= 7 ? eqlogic::Formula::conj(std::move(kids)) : eqlogic::Formula::disj(std::move(kids));
  }

  std::mt19937 rng_;
  std::size_t max_vars_;
  int max_depth_;
  std::vector<eqlogic::Var> pool_;
};

}  // namespace specdens::testgen
