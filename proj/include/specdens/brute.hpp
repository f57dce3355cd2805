#pragma once

// Brute-force oracles for tests: direct enumeration of variable assignments
// over a domain {0..n-1}, and direct evaluation of axiom schemas. Nothing
// here shares code with the symbolic modules beyond the syntax trees.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specdens/eqlogic.hpp"
#include "specdens/schema.hpp"

namespace specdens::brute {

struct Caps {
  std::size_t max_vars = 6;
  Nat max_n = 10;
};

struct BruteResult {
  std::string question;
  Nat lo = 0, hi = 0;  // cardinalities examined
  bool answer = false;
  // Variables grouped by equal value, when answer is true.
  std::optional<std::vector<std::vector<std::string>>> witness;
};

// Some assignment into a domain of n elements satisfies f.
BruteResult brute_sat_at(const eqlogic::Formula& f, Nat n, const Caps& caps = {});

// Least n with brute_sat_at; infinite when even |vars| elements do not help.
ExtNat brute_min_model(const eqlogic::Formula& f, const Caps& caps = {});

using Assignment = std::map<std::string, Nat>;

// Backtracking with three-valued evaluation of partial assignments, for
// formulas with many variables (witness outputs). With `onto`, every domain
// element must be the value of some variable.
std::optional<Assignment> search_assignment(const eqlogic::Formula& f, Nat n, bool onto);

bool eval_under(const eqlogic::Formula& f, const Assignment& a);

// Step function by walking the blocks one position at a time.
Nat naive_step(const SeqPair& sp, Nat n);

// Truth of the schema at cardinality k (nullopt for an infinite model).
bool eval_schema_at(const schema::Schema& s, std::optional<Nat> k,
                    const SeqPair* step = nullptr);

}  // namespace specdens::brute
