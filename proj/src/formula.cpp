#include <cstdlib>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "specdens/eqlogic.hpp"
#include "specdens/errors.hpp"

namespace specdens::eqlogic {

Var Var::intern(std::string_view name) {
  if (!is_valid_var_name(name)) {
    throw Error("invalid variable name '" + std::string(name) + "'");
  }
  static std::mutex mu;
  static std::unordered_set<std::string> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.emplace(name).first;
  return Var(&*it);
}

bool is_valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

struct Formula::Node {
  Kind kind;
  std::optional<Var> lhs, rhs;
  std::vector<Formula> children;
};

namespace {

const std::vector<Formula>& no_children() {
  static const std::vector<Formula> empty;
  return empty;
}

}  // namespace

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}}));
  return t;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}}));
  return f;
}

Formula Formula::eq(Var x, Var y) {
  return Formula(std::make_shared<const Node>(Node{Kind::Eq, x, y, {}}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, std::nullopt, std::nullopt, {std::move(f)}}));
}

// Empty conjunction/disjunction collapse to their units so every node the
// printer sees has at least one child.
Formula Formula::conj(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, std::nullopt, std::nullopt, std::move(parts)}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, std::nullopt, std::nullopt, std::move(parts)}));
}

Formula Formula::implies(Formula premise, Formula conclusion) {
  return disj({neg(std::move(premise)), std::move(conclusion)});
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj({implies(lhs, rhs), implies(rhs, lhs)});
}

Formula Formula::distinct(const std::vector<Var>& vars) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      parts.push_back(neg(eq(vars[i], vars[j])));
    }
  }
  return conj(std::move(parts));
}

Kind Formula::kind() const { return node_->kind; }

Var Formula::lhs() const {
  if (node_->kind != Kind::Eq) throw Error("lhs() on a non-equality");
  return *node_->lhs;
}

Var Formula::rhs() const {
  if (node_->kind != Kind::Eq) throw Error("rhs() on a non-equality");
  return *node_->rhs;
}

const std::vector<Formula>& Formula::children() const {
  return node_->kind == Kind::Eq ? no_children() : node_->children;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Kind::Eq) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  return a.children() == b.children();
}

namespace {

void print(std::ostream& out, const Formula& f) {
  switch (f.kind()) {
    case Kind::True: out << "true"; return;
    case Kind::False: out << "false"; return;
    case Kind::Eq: out << "(= " << f.lhs().name() << ' ' << f.rhs().name() << ')'; return;
    case Kind::Not: out << "(not "; break;
    case Kind::And: out << "(and "; break;
    case Kind::Or: out << "(or "; break;
  }
  bool first = true;
  for (const auto& c : f.children()) {
    if (!first) out << ' ';
    first = false;
    print(out, c);
  }
  out << ')';
}

void collect(const Formula& f, VarSet& out) {
  if (f.kind() == Kind::Eq) {
    out.insert(f.lhs());
    out.insert(f.rhs());
    return;
  }
  for (const auto& c : f.children()) collect(c, out);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Formula& f) {
  print(out, f);
  return out;
}

VarSet free_vars(const Formula& f) {
  VarSet vs;
  collect(f, vs);
  return vs;
}

Limits Limits::from_env() {
  Limits l;
  if (const char* cap = std::getenv("SPECDENS_CAP"); cap && *cap) {
    char* end = nullptr;
    unsigned long v = std::strtoul(cap, &end, 10);
    if (*end != '\0' || v == 0) {
      throw Error("SPECDENS_CAP must be a positive integer");
    }
    l.var_cap = v;
  }
  return l;
}

}  // namespace specdens::eqlogic
