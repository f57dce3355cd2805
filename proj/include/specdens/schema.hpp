#pragma once

// Axiom schemas built from cardinality atoms. One family per line:
//
//   [forall n in N: | forall n in N*:] BOOL
//   BOOL  := BOOL or BOOL | BOOL and BOOL | not BOOL | ( BOOL ) | ATOM | BIGOR
//   ATOM  := atleast(EXPR) | atmost(EXPR) | exactly(EXPR)
//   BIGOR := bigor i=INT..n of ATOM
//   EXPR  := INT | n | EXPR + INT | INT * EXPR | INT^n | INT^(n+INT) | f(n) | f(n+INT)
//
// The index variable may have any name; `f` is the step function of a
// sequence pair bound at compile time. '#' starts a comment.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specdens/numeric.hpp"
#include "specdens/seqpair.hpp"
#include "specdens/spectrum.hpp"

namespace specdens::schema {

struct Expr {
  enum class Kind { Const, Index, Add, Scale, Power, Step };
  Kind kind = Kind::Const;
  BigInt value;            // Const value, Add addend, Scale factor, Power base
  std::string var;         // Index, Power exponent, Step argument
  BigInt offset = 0;       // Power exponent offset, Step argument offset
  std::shared_ptr<const Expr> sub;  // Add, Scale

  bool mentions(const std::string& v) const;
  std::string to_string() const;
};

enum class AtomKind { AtLeast, AtMost, Exactly };

struct Atom {
  AtomKind kind;
  Expr expr;
};

struct Node {
  enum class Kind { Atom, BigOr, Not, And, Or };
  Kind kind = Kind::Atom;
  std::optional<Atom> atom;  // Atom, BigOr body
  std::string big_var;       // BigOr bound variable
  BigInt big_lo = 0;         // BigOr lower bound; the upper bound is the index
  std::vector<Node> kids;

  std::string to_string() const;
};

struct Axiom {
  // Empty when the line has no index; `index_from` is 0 for N and 1 for N*.
  std::string index_var;
  Nat index_from = 0;
  Node body;
  std::string text;
};

struct Schema {
  std::vector<Axiom> axioms;
};

Schema parse(std::string_view text);

// Direct semantics. `step` resolves f(x); required when the schema uses f.
struct Env {
  const SeqPair* step = nullptr;
};

BigInt eval_expr(const Expr& e, const std::string& index_var, const BigInt& index,
                 const std::string& big_var, const BigInt& big_index, const Env& env);

// Truth of every instance of the axiom at cardinality k, checking indices up
// to the horizon past which every index-dependent expression exceeds k.
bool axiom_holds_at(const Axiom& ax, Nat k, const Env& env);
bool axiom_holds_at_infinity(const Axiom& ax);
bool holds_at(const Schema& s, Nat k, const Env& env);
bool holds_at_infinity(const Schema& s);

struct CompileOptions {
  bool allow_oracle_fallback = true;
  // Range over which a template's proposal is checked against direct
  // evaluation, and the known range of a fallback oracle.
  Nat verify_upto = 256;
  Nat fallback_upto = 4096;
};

struct Compiled {
  SpectrumClass spectrum = SpectrumClass::empty();
  bool admits_infinite = false;
  std::string method;  // which template (or "oracle fallback") produced it
  std::vector<std::string> warnings;
};

Compiled compile_axioms(const Schema& s, const Env& env = {},
                        const CompileOptions& opts = {});

}  // namespace specdens::schema
