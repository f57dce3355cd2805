#pragma once

// Symbolic sets of positive naturals: the finite model sizes of a theory.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specdens/numeric.hpp"
#include "specdens/seqpair.hpp"

namespace specdens {

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

enum class Shape { Finite, Cofinite, Neither, Unknown };

std::string to_string(Shape s);

namespace spec {

struct Finite {
  std::vector<Nat> members;
};

struct Cofinite {
  std::vector<Nat> excluded;
};

// {n >= 1 : n mod modulus in residues} plus `added`, minus `removed`.
struct Periodic {
  Nat modulus = 1;
  std::vector<Nat> residues;
  std::vector<Nat> added;
  std::vector<Nat> removed;
};

// {base^i + shift : i >= min_exponent}, or its complement in the positive
// naturals when `complemented`.
struct Geometric {
  Nat base = 2;
  Nat min_exponent = 0;
  Nat shift = 0;
  bool complemented = false;
};

class BlockCache;

// Image of the step function built from a sequence pair.
struct StepImage {
  SeqPair seq;
  std::shared_ptr<BlockCache> cache;
};

// The image of the construction driven by a bit source g: block i has length
// 2*b_i and holds 2*a_i ones, arranged according to bit i.
struct GStep {
  SeqPair seq;
  std::vector<bool> bits;
  bool bits_computable = true;
  std::shared_ptr<BlockCache> cache;
};

// Membership supplied from outside: a union of closed intervals (a table of
// singletons is the degenerate case), or a predicate. Answers past
// `known_upto` come from the predicate if present, else fail.
struct OracleBacked {
  std::string label;
  std::vector<std::pair<Nat, Nat>> intervals;
  std::function<bool(Nat)> predicate;
  Nat known_upto = 0;
  bool computable = false;
  Shape shape = Shape::Unknown;
  std::optional<Rational> declared_density;
  // The spectrum's gaps outgrow every computable bound, so no computable
  // witness can cover its models.
  bool escapes_computable_bounds = false;
  Nat search_cap = 1'000'000;
};

}  // namespace spec

class SpectrumClass {
 public:
  using Variant = std::variant<spec::Finite, spec::Cofinite, spec::Periodic,
                               spec::Geometric, spec::StepImage, spec::GStep,
                               spec::OracleBacked>;

  static SpectrumClass finite(std::vector<Nat> members);
  static SpectrumClass cofinite(std::vector<Nat> excluded);
  static SpectrumClass periodic(Nat modulus, std::vector<Nat> residues,
                                std::vector<Nat> added = {},
                                std::vector<Nat> removed = {});
  static SpectrumClass geometric(Nat base, Nat min_exponent = 0, Nat shift = 0,
                                 bool complemented = false);
  static SpectrumClass step_image(SeqPair seq);
  static SpectrumClass oracle(spec::OracleBacked o);
  static SpectrumClass empty() { return finite({}); }

  const Variant& variant() const { return v_; }
  // Members below the floor are dropped; only used by kinds without a
  // natural closed form for prefix removal.
  Nat floor() const { return floor_; }
  std::string kind_name() const;
  std::string describe() const;

  bool member(Nat n) const;
  Nat count_upto(Nat n) const;
  // Least member >= k, nullopt when none exists. Oracle searches are capped.
  std::optional<Nat> next_member(Nat k) const;
  // The j-th smallest member (1-based), nullopt when there are fewer.
  std::optional<Nat> nth_element(Nat j) const;

  Tri bounded() const;
  // Largest member of a bounded set (nullopt when empty or unbounded).
  std::optional<Nat> max_member() const;
  Shape shape() const;
  // m such that the set is exactly [m, inf), if it is one.
  std::optional<Nat> upper_interval_start() const;
  // Some a < c < b with a, b members and c not a member.
  Tri has_internal_gap() const;
  // Whether membership is a computable predicate.
  Tri computable() const;

  // This set intersected with [m, inf).
  SpectrumClass restrict_from(Nat m) const;

  // Agreement on [1, n].
  bool equal_upto(const SpectrumClass& other, Nat n) const;

 private:
  explicit SpectrumClass(Variant v) : v_(std::move(v)) {}
  Variant v_;
  Nat floor_ = 1;

  friend SpectrumClass g_construction(const SeqPair&, std::vector<bool>, bool);
};

// Value of the step function at n >= 1.
Nat step_function(const SeqPair& sp, Nat n);

// The G-construction's spectrum for a bit source.
SpectrumClass g_construction(const SeqPair& sp, std::vector<bool> bits,
                             bool bits_computable = true);

// The 0/1 value G(n) of the construction.
bool g_value(const SeqPair& sp, const std::vector<bool>& bits, Nat n);

}  // namespace specdens
