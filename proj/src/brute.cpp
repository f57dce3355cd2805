#include "specdens/brute.hpp"

#include <algorithm>
#include <functional>

#include "specdens/errors.hpp"

namespace specdens::brute {

using eqlogic::Formula;
using eqlogic::Kind;

namespace {

void collect(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Kind::Eq) {
    for (const std::string& n : {f.lhs().name(), f.rhs().name()}) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return;
  }
  if (f.kind() == Kind::True || f.kind() == Kind::False) return;
  for (const auto& c : f.children()) collect(c, out);
}

// Variables in some atom x = y with x != y, in order of appearance.
void collect_linked(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Kind::Eq) {
    if (f.lhs() == f.rhs()) return;
    for (const std::string& n : {f.lhs().name(), f.rhs().name()}) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return;
  }
  if (f.kind() == Kind::True || f.kind() == Kind::False) return;
  for (const auto& c : f.children()) collect_linked(c, out);
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> v;
  collect(f, v);
  std::sort(v.begin(), v.end());
  return v;
}

enum class V3 { T, F, U };

V3 eval3(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Kind::True: return V3::T;
    case Kind::False: return V3::F;
    case Kind::Eq: {
      if (f.lhs() == f.rhs()) return V3::T;
      auto x = a.find(f.lhs().name());
      auto y = a.find(f.rhs().name());
      if (x == a.end() || y == a.end()) return V3::U;
      return x->second == y->second ? V3::T : V3::F;
    }
    case Kind::Not: {
      V3 v = eval3(f.children()[0], a);
      return v == V3::U ? V3::U : v == V3::T ? V3::F : V3::T;
    }
    case Kind::And: {
      V3 r = V3::T;
      for (const auto& c : f.children()) {
        V3 v = eval3(c, a);
        if (v == V3::F) return V3::F;
        if (v == V3::U) r = V3::U;
      }
      return r;
    }
    case Kind::Or: {
      V3 r = V3::F;
      for (const auto& c : f.children()) {
        V3 v = eval3(c, a);
        if (v == V3::T) return V3::T;
        if (v == V3::U) r = V3::U;
      }
      return r;
    }
  }
  return V3::U;
}

}  // namespace

bool eval_under(const Formula& f, const Assignment& a) {
  V3 v = eval3(f, a);
  if (v == V3::U) throw UnboundVariable("assignment misses a variable of the formula");
  return v == V3::T;
}

BruteResult brute_sat_at(const Formula& f, Nat n, const Caps& caps) {
  if (n == 0) throw PreconditionError("cardinality must be positive");
  const auto vars = variables(f);
  if (vars.size() > caps.max_vars || n > caps.max_n) {
    throw CapError("brute enumeration is limited to " + std::to_string(caps.max_vars) +
                   " variables and " + std::to_string(caps.max_n) + " elements");
  }
  BruteResult r{"sat_at", n, n, false, std::nullopt};
  // Odometer over all n^|vars| assignments.
  std::vector<Nat> digits(vars.size(), 0);
  Assignment a;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = digits[i];
    if (eval_under(f, a)) {
      r.answer = true;
      std::map<Nat, std::vector<std::string>> groups;
      for (const auto& [name, v] : a) groups[v].push_back(name);
      std::vector<std::vector<std::string>> w;
      for (auto& [v, names] : groups) w.push_back(std::move(names));
      r.witness = std::move(w);
      return r;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) return r;
  }
}

ExtNat brute_min_model(const Formula& f, const Caps& caps) {
  const Nat top = std::max<Nat>(1, variables(f).size());
  for (Nat n = 1; n <= top; ++n) {
    if (brute_sat_at(f, n, caps).answer) return ExtNat(n);
  }
  return ExtNat::infinite();
}

std::optional<Assignment> search_assignment(const Formula& f, Nat n, bool onto) {
  if (n == 0) throw PreconditionError("cardinality must be positive");
  // Constrained variables first, so that f settles early.
  std::vector<std::string> vars;
  collect_linked(f, vars);
  for (const auto& v : variables(f)) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  if (onto && vars.size() < n) return std::nullopt;
  Assignment a;
  std::vector<Nat> used(n, 0);
  Nat distinct_used = 0;

  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    const std::size_t left = vars.size() - i;
    if (onto && left < n - distinct_used) return false;
    V3 v = eval3(f, a);
    if (v == V3::F) return false;
    if (v == V3::T) {
      // Any completion keeps f true; fill unused values first when covering.
      Nat next = 0;
      for (std::size_t j = i; j < vars.size(); ++j) {
        while (onto && next < n && used[next] > 0) ++next;
        Nat val = (onto && next < n) ? next++ : 0;
        a[vars[j]] = val;
        ++used[val];
      }
      return true;
    }
    // Domain elements are interchangeable, so values are used in order: the
    // values taken so far are always 0..distinct_used-1.
    for (Nat val = 0; val < std::min(n, distinct_used + 1); ++val) {
      a[vars[i]] = val;
      if (used[val]++ == 0) ++distinct_used;
      if (go(i + 1)) return true;
      if (--used[val] == 0) --distinct_used;
    }
    a.erase(vars[i]);
    return false;
  };
  if (go(0)) return a;
  return std::nullopt;
}

Nat naive_step(const SeqPair& sp, Nat n) {
  if (n == 0) throw PreconditionError("step function starts at 1");
  Nat pos = 0, value = 0;
  for (std::size_t i = 0;; ++i) {
    auto [a, b] = sp.at(i);
    for (BigInt t = 1; t <= b; ++t) {
      ++pos;
      if (t <= a) value = pos;
      if (pos == n) return value;
    }
  }
}

namespace {

using Bindings = std::map<std::string, BigInt>;

struct SchemaEval {
  const SeqPair* step;

  BigInt expr(const schema::Expr& e, const Bindings& b) const {
    using K = schema::Expr::Kind;
    auto var = [&](const std::string& name) {
      auto it = b.find(name);
      if (it == b.end()) throw SchemaError("unbound index '" + name + "'");
      return it->second;
    };
    switch (e.kind) {
      case K::Const: return e.value;
      case K::Index: return var(e.var);
      case K::Add: return expr(*e.sub, b) + e.value;
      case K::Scale: return e.value * expr(*e.sub, b);
      case K::Power: {
        BigInt x = var(e.var) + e.offset;
        if (x < 0) throw SchemaError("negative exponent");
        return boost::multiprecision::pow(e.value, static_cast<unsigned>(to_nat(x)));
      }
      case K::Step: {
        if (!step) throw SchemaError("schema uses f but no sequence pair is bound");
        BigInt x = var(e.var) + e.offset;
        if (x < 1) throw SchemaError("f is defined from 1");
        return BigInt(naive_step(*step, to_nat(x)));
      }
    }
    return 0;
  }

  bool atom(const schema::Atom& a, const Bindings& b, std::optional<Nat> k) const {
    if (!k) return a.kind == schema::AtomKind::AtLeast;
    BigInt v = expr(a.expr, b);
    switch (a.kind) {
      case schema::AtomKind::AtLeast: return BigInt(*k) >= v;
      case schema::AtomKind::AtMost: return BigInt(*k) <= v;
      case schema::AtomKind::Exactly: return BigInt(*k) == v;
    }
    return false;
  }

  bool node(const schema::Node& n, Bindings& b, const BigInt& index, std::optional<Nat> k) const {
    using K = schema::Node::Kind;
    switch (n.kind) {
      case K::Atom: return atom(*n.atom, b, k);
      case K::BigOr:
        for (BigInt i = n.big_lo; i <= index; ++i) {
          b[n.big_var] = i;
          bool hit = atom(*n.atom, b, k);
          b.erase(n.big_var);
          if (hit) return true;
        }
        return false;
      case K::Not: return !node(n.kids[0], b, index, k);
      case K::And:
        for (const auto& c : n.kids) {
          if (!node(c, b, index, k)) return false;
        }
        return true;
      case K::Or:
        for (const auto& c : n.kids) {
          if (node(c, b, index, k)) return true;
        }
        return false;
    }
    return false;
  }

  // Whether every expression that moves with the index exceeds k at this
  // index; later instances then read the same.
  bool past_horizon(const schema::Node& n, Bindings& b, const std::string& ix, const BigInt& index,
                    Nat k) const {
    using K = schema::Node::Kind;
    switch (n.kind) {
      case K::Atom:
        return !n.atom->expr.mentions(ix) || expr(n.atom->expr, b) > k;
      case K::BigOr: {
        b[n.big_var] = index;
        bool past = expr(n.atom->expr, b) > k;
        b.erase(n.big_var);
        return past;
      }
      default:
        for (const auto& c : n.kids) {
          if (!past_horizon(c, b, ix, index, k)) return false;
        }
        return true;
    }
  }
};

bool uses_index(const schema::Node& n, const std::string& ix) {
  if (n.kind == schema::Node::Kind::BigOr) return true;
  if (n.kind == schema::Node::Kind::Atom) return n.atom->expr.mentions(ix);
  return std::any_of(n.kids.begin(), n.kids.end(),
                     [&](const schema::Node& c) { return uses_index(c, ix); });
}

}  // namespace

bool eval_schema_at(const schema::Schema& s, std::optional<Nat> k, const SeqPair* step) {
  SchemaEval ev{step};
  constexpr Nat kMaxIndex = 4096;
  for (const auto& ax : s.axioms) {
    const std::string ix = ax.index_var.empty() ? std::string("n") : ax.index_var;
    const bool indexed = !ax.index_var.empty() || uses_index(ax.body, ix);
    for (Nat i = ax.index_from;; ++i) {
      if (i > kMaxIndex) throw SchemaError("no horizon found for '" + ax.text + "'");
      Bindings b{{ix, BigInt(i)}};
      if (!ev.node(ax.body, b, BigInt(i), k)) return false;
      // At infinity the atoms ignore their arguments, so one instance decides.
      if (!indexed || !k || ev.past_horizon(ax.body, b, ix, BigInt(i), *k)) break;
    }
  }
  return true;
}

}  // namespace specdens::brute
