#pragma once

// Quantifier-free equality logic over the empty signature: formulas whose
// only atoms are variable equalities, their set-partition semantics, and the
// least domain size that satisfies them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "specdens/numeric.hpp"

namespace specdens::eqlogic {

// Interned variable name. Copies are pointer-sized; equality is identity of
// the interned string, ordering is lexicographic on the name.
class Var {
 public:
  static Var intern(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Var a, Var b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Var a, Var b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

 private:
  explicit Var(const std::string* name) : name_(name) {}
  const std::string* name_;
};

using VarSet = std::set<Var>;

bool is_valid_var_name(std::string_view name);

enum class Kind { True, False, Eq, Not, And, Or };

// Immutable formula tree. Implication and biconditional are accepted by the
// builders but normalized to And/Or/Not, so only six node kinds exist.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula eq(Var x, Var y);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula implies(Formula premise, Formula conclusion);
  static Formula iff(Formula lhs, Formula rhs);
  // Pairwise disequalities of `vars`, i <  j, in the given order.
  static Formula distinct(const std::vector<Var>& vars);

  Kind kind() const;
  Var lhs() const;  // Eq only
  Var rhs() const;  // Eq only
  const std::vector<Formula>& children() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse(std::string_view text);
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& out, const Formula& f);

VarSet free_vars(const Formula& f);

struct Limits {
  std::size_t var_cap = 12;

  // Default limits with SPECDENS_CAP applied when it is set.
  static Limits from_env();
};

// A set partition of a finite variable set.
class Arrangement {
 public:
  explicit Arrangement(std::vector<std::vector<Var>> blocks);

  // Block i holds the variables whose growth-string entry is i.
  static Arrangement from_rgs(const std::vector<Var>& vars,
                              const std::vector<std::uint8_t>& rgs);

  const std::vector<std::vector<Var>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  VarSet vars() const;
  std::optional<std::size_t> block_of(Var v) const;
  bool related(Var x, Var y) const;

  // Equality as partitions: block order and order inside blocks are ignored.
  friend bool operator==(const Arrangement& a, const Arrangement& b);

 private:
  std::vector<std::vector<Var>> blocks_;
};

std::ostream& operator<<(std::ostream& out, const Arrangement& a);

// Restartable stream of every set partition of a variable set, in
// restricted-growth-string order (the first partition puts everything in one
// block). A fresh stream from `arrangements` starts over.
class ArrangementStream {
 public:
  ArrangementStream(const VarSet& vars, const Limits& limits);

  std::optional<Arrangement> next();

 private:
  std::vector<Var> vars_;
  std::vector<std::uint8_t> rgs_;
  std::vector<std::uint8_t> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

ArrangementStream arrangements(const VarSet& vars, const Limits& limits = {});

bool eval_under(const Formula& f, const Arrangement& a);

Formula arrangement_formula(const Arrangement& a);

// Least block count of an arrangement of free_vars(f) satisfying f (at least
// 1, since domains are non-empty); infinite when no arrangement does.
ExtNat min_model_size(const Formula& f, const Limits& limits = {});

// Some domain of size n satisfies f under some assignment.
bool sat_at(const Formula& f, Nat n, const Limits& limits = {});

}  // namespace specdens::eqlogic
