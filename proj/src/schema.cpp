#include "specdens/schema.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include "specdens/errors.hpp"

namespace specdens::schema {

bool Expr::mentions(const std::string& v) const {
  switch (kind) {
    case Kind::Const: return false;
    case Kind::Index:
    case Kind::Power:
    case Kind::Step: return var == v;
    case Kind::Add:
    case Kind::Scale: return sub->mentions(v);
  }
  return false;
}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Const: return value.str();
    case Kind::Index: return var;
    case Kind::Add: return sub->to_string() + "+" + value.str();
    case Kind::Scale: return value.str() + "*" + sub->to_string();
    case Kind::Power:
      if (offset == 0) return value.str() + "^" + var;
      return value.str() + "^(" + var + "+" + offset.str() + ")";
    case Kind::Step:
      if (offset == 0) return "f(" + var + ")";
      return "f(" + var + "+" + offset.str() + ")";
  }
  return "?";
}

namespace {

std::string atom_string(const Atom& a) {
  const char* name = a.kind == AtomKind::AtLeast  ? "atleast"
                     : a.kind == AtomKind::AtMost ? "atmost"
                                                  : "exactly";
  return std::string(name) + "(" + a.expr.to_string() + ")";
}

}  // namespace

std::string Node::to_string() const {
  switch (kind) {
    case Kind::Atom: return atom_string(*atom);
    case Kind::BigOr:
      return "bigor " + big_var + "=" + big_lo.str() + "..n of " + atom_string(*atom);
    case Kind::Not: return "not " + kids[0].to_string();
    case Kind::And:
    case Kind::Or: {
      std::string sep = kind == Kind::And ? " and " : " or ";
      std::string out = "(";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) out += sep;
        out += kids[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t s = i;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
        ++i;
      }
      out.push_back({Token::Ident, std::string(line.substr(s, i - s)), s});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t s = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Token::Int, std::string(line.substr(s, i - s)), s});
    } else if (c == '.' && i + 1 < line.size() && line[i + 1] == '.') {
      out.push_back({Token::Sym, "..", i});
      i += 2;
    } else if (std::string_view("()+*^=:").find(c) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, c), i});
      ++i;
    } else {
      throw SchemaError("line " + std::to_string(line_no) + ", column " +
                        std::to_string(i + 1) + ": unexpected '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::End, "", line.size()});
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : toks_(tokenize(line, line_no)), line_no_(line_no) {}

  Axiom parse() {
    Axiom ax;
    if (peek_ident("forall")) {
      ++pos_;
      ax.index_var = ident("index variable");
      expect_ident("in");
      expect_ident("N");
      if (peek_sym("*")) {
        ++pos_;
        ax.index_from = 1;
      }
      expect_sym(":");
    }
    index_var_ = ax.index_var;
    ax.body = disjunction();
    if (toks_[pos_].kind != Token::End) fail("unexpected '" + toks_[pos_].text + "'");
    return ax;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SchemaError("line " + std::to_string(line_no_) + ", column " +
                      std::to_string(toks_[pos_].pos + 1) + ": " + msg);
  }

  bool peek_ident(const char* word) const {
    return toks_[pos_].kind == Token::Ident && toks_[pos_].text == word;
  }
  bool peek_sym(const char* s) const {
    return toks_[pos_].kind == Token::Sym && toks_[pos_].text == s;
  }
  void expect_ident(const char* word) {
    if (!peek_ident(word)) fail(std::string("expected '") + word + "'");
    ++pos_;
  }
  void expect_sym(const char* s) {
    if (!peek_sym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  std::string ident(const char* what) {
    if (toks_[pos_].kind != Token::Ident) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }
  BigInt integer() {
    if (toks_[pos_].kind != Token::Int) fail("expected an integer");
    return BigInt(toks_[pos_++].text);
  }

  Node disjunction() {
    Node first = conjunction();
    if (!peek_ident("or")) return first;
    Node n;
    n.kind = Node::Kind::Or;
    n.kids.push_back(std::move(first));
    while (peek_ident("or")) {
      ++pos_;
      n.kids.push_back(conjunction());
    }
    return n;
  }

  Node conjunction() {
    Node first = unary();
    if (!peek_ident("and")) return first;
    Node n;
    n.kind = Node::Kind::And;
    n.kids.push_back(std::move(first));
    while (peek_ident("and")) {
      ++pos_;
      n.kids.push_back(unary());
    }
    return n;
  }

  Node unary() {
    if (peek_ident("not")) {
      ++pos_;
      Node n;
      n.kind = Node::Kind::Not;
      n.kids.push_back(unary());
      return n;
    }
    if (peek_sym("(")) {
      ++pos_;
      Node n = disjunction();
      expect_sym(")");
      return n;
    }
    if (peek_ident("bigor")) {
      ++pos_;
      Node n;
      n.kind = Node::Kind::BigOr;
      n.big_var = ident("bound variable");
      if (n.big_var == index_var_) fail("bound variable shadows the index");
      expect_sym("=");
      n.big_lo = integer();
      expect_sym("..");
      std::string upper = ident("upper bound");
      if (index_var_.empty() && upper == "n") index_var_ = "n";
      if (upper != index_var_) fail("bigor must run up to the index variable");
      expect_ident("of");
      big_var_ = n.big_var;
      n.atom = atom();
      big_var_.clear();
      return n;
    }
    Node n;
    n.kind = Node::Kind::Atom;
    n.atom = atom();
    return n;
  }

  Atom atom() {
    std::string name = ident("atleast, atmost or exactly");
    AtomKind k;
    if (name == "atleast") {
      k = AtomKind::AtLeast;
    } else if (name == "atmost") {
      k = AtomKind::AtMost;
    } else if (name == "exactly") {
      k = AtomKind::Exactly;
    } else {
      --pos_;
      fail("unknown atom '" + name + "'");
    }
    expect_sym("(");
    Expr e = expr();
    expect_sym(")");
    return Atom{k, std::move(e)};
  }

  std::string variable() {
    std::string v = ident("variable");
    if (v == index_var_ || (!big_var_.empty() && v == big_var_)) return v;
    if (index_var_.empty() && v == "n") {
      index_var_ = "n";
      return v;
    }
    --pos_;
    fail("unknown variable '" + v + "'");
  }

  Expr expr() {
    Expr e = term();
    while (peek_sym("+")) {
      ++pos_;
      Expr sum;
      sum.kind = Expr::Kind::Add;
      sum.value = integer();
      sum.sub = std::make_shared<const Expr>(std::move(e));
      e = std::move(sum);
    }
    return e;
  }

  Expr term() {
    Expr e;
    if (toks_[pos_].kind == Token::Int) {
      BigInt c = integer();
      if (peek_sym("*")) {
        ++pos_;
        e.kind = Expr::Kind::Scale;
        e.value = c;
        e.sub = std::make_shared<const Expr>(term());
        return e;
      }
      if (peek_sym("^")) {
        ++pos_;
        e.kind = Expr::Kind::Power;
        e.value = c;
        if (peek_sym("(")) {
          ++pos_;
          e.var = variable();
          expect_sym("+");
          e.offset = integer();
          expect_sym(")");
        } else {
          e.var = variable();
        }
        return e;
      }
      e.kind = Expr::Kind::Const;
      e.value = c;
      return e;
    }
    if (peek_ident("f")) {
      ++pos_;
      expect_sym("(");
      e.kind = Expr::Kind::Step;
      e.var = variable();
      if (peek_sym("+")) {
        ++pos_;
        e.offset = integer();
      }
      expect_sym(")");
      return e;
    }
    e.kind = Expr::Kind::Index;
    e.var = variable();
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
  std::string index_var_;
  std::string big_var_;
};

// Lazily tabulated values of the step function of one sequence pair.
class StepTable {
 public:
  explicit StepTable(const SeqPair& sp) : sp_(sp) {}

  Nat at(Nat x) {
    if (x == 0) throw SchemaError("f is defined on positive arguments only");
    while (values_.size() < x) {
      if (pos_in_block_ == 0) {
        auto [a, b] = sp_.at(block_);
        a_ = to_nat(a);
        b_ = to_nat(b);
      }
      ++pos_in_block_;
      Nat n = values_.size() + 1;
      values_.push_back(pos_in_block_ <= a_ ? n : start_ + a_);
      if (pos_in_block_ == b_) {
        start_ += b_;
        pos_in_block_ = 0;
        ++block_;
      }
    }
    return values_[x - 1];
  }

 private:
  const SeqPair& sp_;
  std::vector<Nat> values_;
  std::size_t block_ = 0;
  Nat start_ = 0, a_ = 0, b_ = 0, pos_in_block_ = 0;
};

struct Evaluator {
  const Env& env;
  std::unique_ptr<StepTable> table;

  explicit Evaluator(const Env& e) : env(e) {
    if (env.step) table = std::make_unique<StepTable>(*env.step);
  }

  BigInt value(const Expr& e, const std::string& iv, const BigInt& n,
               const std::string& bv, const BigInt& i) {
    auto var_value = [&](const std::string& v) -> BigInt {
      if (v == iv) return n;
      if (!bv.empty() && v == bv) return i;
      throw SchemaError("unbound schema variable '" + v + "'");
    };
    switch (e.kind) {
      case Expr::Kind::Const: return e.value;
      case Expr::Kind::Index: return var_value(e.var);
      case Expr::Kind::Add: return value(*e.sub, iv, n, bv, i) + e.value;
      case Expr::Kind::Scale: return e.value * value(*e.sub, iv, n, bv, i);
      case Expr::Kind::Power: {
        BigInt x = var_value(e.var) + e.offset;
        if (x > 4096) throw SchemaError("exponent too large to evaluate");
        return boost::multiprecision::pow(e.value, static_cast<unsigned>(x));
      }
      case Expr::Kind::Step: {
        if (!table) throw SchemaError("schema uses f but no sequence pair is bound");
        return BigInt(table->at(to_nat(var_value(e.var) + e.offset)));
      }
    }
    return 0;
  }

  bool atom(const Atom& a, Nat k, const std::string& iv, const BigInt& n,
            const std::string& bv, const BigInt& i) {
    BigInt v = value(a.expr, iv, n, bv, i);
    switch (a.kind) {
      case AtomKind::AtLeast: return k >= v;
      case AtomKind::AtMost: return k <= v;
      case AtomKind::Exactly: return k == v;
    }
    return false;
  }

  bool node(const Node& nd, Nat k, const std::string& iv, const BigInt& n) {
    switch (nd.kind) {
      case Node::Kind::Atom: return atom(*nd.atom, k, iv, n, "", 0);
      case Node::Kind::BigOr:
        for (BigInt i = nd.big_lo; i <= n; ++i) {
          if (atom(*nd.atom, k, iv, n, nd.big_var, i)) return true;
        }
        return false;
      case Node::Kind::Not: return !node(nd.kids[0], k, iv, n);
      case Node::Kind::And:
        for (const auto& c : nd.kids) {
          if (!node(c, k, iv, n)) return false;
        }
        return true;
      case Node::Kind::Or:
        for (const auto& c : nd.kids) {
          if (node(c, k, iv, n)) return true;
        }
        return false;
    }
    return false;
  }
};

bool node_at_infinity(const Node& nd) {
  switch (nd.kind) {
    case Node::Kind::Atom: return nd.atom->kind == AtomKind::AtLeast;
    case Node::Kind::BigOr: return false;
    case Node::Kind::Not: return !node_at_infinity(nd.kids[0]);
    case Node::Kind::And:
      for (const auto& c : nd.kids) {
        if (!node_at_infinity(c)) return false;
      }
      return true;
    case Node::Kind::Or:
      for (const auto& c : nd.kids) {
        if (node_at_infinity(c)) return true;
      }
      return false;
  }
  return false;
}

// Non-decreasing and unbounded in `v`.
bool grows(const Expr& e, const std::string& v) {
  switch (e.kind) {
    case Expr::Kind::Const: return false;
    case Expr::Kind::Index: return e.var == v;
    case Expr::Kind::Add: return grows(*e.sub, v);
    case Expr::Kind::Scale: return e.value > 0 && grows(*e.sub, v);
    case Expr::Kind::Power: return e.var == v && e.value >= 2;
    case Expr::Kind::Step: return e.var == v;
  }
  return false;
}

// Expressions whose growth decides the horizon: plain atoms that mention the
// index, and bigor bodies read at the bound variable.
void horizon_exprs(const Node& nd, const std::string& iv,
                   std::vector<std::pair<const Expr*, std::string>>& out) {
  if (nd.kind == Node::Kind::Atom) {
    if (nd.atom->expr.mentions(iv)) out.emplace_back(&nd.atom->expr, iv);
    return;
  }
  if (nd.kind == Node::Kind::BigOr) {
    out.emplace_back(&nd.atom->expr, nd.big_var);
    return;
  }
  for (const auto& c : nd.kids) horizon_exprs(c, iv, out);
}

bool mentions_index(const Node& nd, const std::string& iv) {
  if (iv.empty()) return false;
  if (nd.kind == Node::Kind::BigOr) return true;
  if (nd.atom && nd.atom->expr.mentions(iv)) return true;
  for (const auto& c : nd.kids) {
    if (mentions_index(c, iv)) return true;
  }
  return false;
}

std::string effective_index(const Axiom& ax) {
  if (!ax.index_var.empty()) return ax.index_var;
  return "n";
}

bool axiom_holds(const Axiom& ax, Nat k, Evaluator& ev) {
  const std::string iv = effective_index(ax);
  if (!mentions_index(ax.body, iv)) return ev.node(ax.body, k, iv, 0);
  std::vector<std::pair<const Expr*, std::string>> exprs;
  horizon_exprs(ax.body, iv, exprs);
  for (const auto& [e, v] : exprs) {
    if (!grows(*e, v)) {
      throw SchemaError("cannot bound the instances of '" + ax.text + "': " +
                        e->to_string() + " does not grow with " + v);
    }
  }
  constexpr Nat kMaxInstances = 10'000'000;
  for (Nat n = ax.index_from;; ++n) {
    if (!ev.node(ax.body, k, iv, n)) return false;
    bool past = true;
    for (const auto& [e, v] : exprs) {
      const BigInt idx = n;
      BigInt val = v == iv ? ev.value(*e, iv, idx, "", 0) : ev.value(*e, iv, idx, v, idx);
      if (val <= k) {
        past = false;
        break;
      }
    }
    if (past) return true;
    if (n - ax.index_from > kMaxInstances) {
      throw SchemaError("instance horizon of '" + ax.text + "' is out of reach");
    }
  }
}

}  // namespace

Schema parse(std::string_view text) {
  Schema s;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) {
      Axiom ax = LineParser(line, line_no).parse();
      std::size_t b = 0, e = line.size();
      while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
      ax.text = std::string(line.substr(b, e - b));
      s.axioms.push_back(std::move(ax));
    }
    start = end + 1;
  }
  return s;
}

BigInt eval_expr(const Expr& e, const std::string& index_var, const BigInt& index,
                 const std::string& big_var, const BigInt& big_index, const Env& env) {
  Evaluator ev(env);
  return ev.value(e, index_var, index, big_var, big_index);
}

bool axiom_holds_at(const Axiom& ax, Nat k, const Env& env) {
  Evaluator ev(env);
  return axiom_holds(ax, k, ev);
}

bool axiom_holds_at_infinity(const Axiom& ax) { return node_at_infinity(ax.body); }

bool holds_at(const Schema& s, Nat k, const Env& env) {
  Evaluator ev(env);
  for (const auto& ax : s.axioms) {
    if (!axiom_holds(ax, k, ev)) return false;
  }
  return true;
}

bool holds_at_infinity(const Schema& s) {
  for (const auto& ax : s.axioms) {
    if (!axiom_holds_at_infinity(ax)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Template compilation

namespace {

void constants(const Expr& e, BigInt& top) {
  if (e.kind == Expr::Kind::Const) top = std::max(top, e.value);
  if (e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Scale) {
    // Index-free by the caller's check, so the value is a constant.
    constants(*e.sub, top);
    top = std::max(top, eval_expr(e, "", 0, "", 0, {}));
  }
}

void constants(const Node& nd, BigInt& top) {
  if (nd.atom) constants(nd.atom->expr, top);
  for (const auto& c : nd.kids) constants(c, top);
}

// Spectrum of an index-free node: every atom is settled past its largest
// constant, so sizes above it behave alike.
SpectrumClass constant_spectrum(const Node& nd) {
  BigInt top = 0;
  constants(nd, top);
  if (top > 1'000'000) throw SchemaError("constant schema too large to tabulate");
  Nat limit = to_nat(top) + 1;
  Axiom ax;
  ax.body = nd;
  Env env;
  Evaluator ev(env);
  std::vector<Nat> in, out;
  for (Nat k = 1; k <= limit; ++k) (axiom_holds(ax, k, ev) ? in : out).push_back(k);
  if (axiom_holds(ax, limit, ev)) {
    out.erase(std::remove(out.begin(), out.end(), limit), out.end());
    return SpectrumClass::cofinite(out);
  }
  return SpectrumClass::finite(in);
}

// c*v + d as (c, d).
std::optional<std::pair<BigInt, BigInt>> affine(const Expr& e, const std::string& v) {
  switch (e.kind) {
    case Expr::Kind::Const: return std::make_pair(BigInt(0), e.value);
    case Expr::Kind::Index:
      if (e.var != v) return std::nullopt;
      return std::make_pair(BigInt(1), BigInt(0));
    case Expr::Kind::Add: {
      auto s = affine(*e.sub, v);
      if (!s) return std::nullopt;
      return std::make_pair(s->first, s->second + e.value);
    }
    case Expr::Kind::Scale: {
      auto s = affine(*e.sub, v);
      if (!s) return std::nullopt;
      return std::make_pair(s->first * e.value, s->second * e.value);
    }
    default: return std::nullopt;
  }
}

struct Proposal {
  SpectrumClass spectrum;
  std::string method;
};

bool is_atom(const Node& n, AtomKind k) {
  return n.kind == Node::Kind::Atom && n.atom->kind == k;
}

std::optional<Proposal> propose(const Axiom& ax, const Env& env) {
  const std::string iv = effective_index(ax);
  const Node& b = ax.body;
  if (!mentions_index(b, iv)) return Proposal{constant_spectrum(b), "constant"};

  // not exactly(c*n+d) and not exactly(c^n)
  if (b.kind == Node::Kind::Not && is_atom(b.kids[0], AtomKind::Exactly)) {
    const Expr& e = b.kids[0].atom->expr;
    if (auto lin = affine(e, iv); lin && lin->first >= 1 && lin->second >= 0) {
      Nat c = to_nat(lin->first);
      Nat first = to_nat(lin->first * ax.index_from + lin->second);
      if (first == 0) first = c;  // 0 is not a size; the next term is
      if (c == 1) {
        std::vector<Nat> below;
        for (Nat k = 1; k < first; ++k) below.push_back(k);
        return Proposal{SpectrumClass::finite(below), "excluded progression"};
      }
      Nat d = first % c;
      std::vector<Nat> residues, added;
      for (Nat r = 0; r < c; ++r) {
        if (r != d) residues.push_back(r);
      }
      for (Nat k = d == 0 ? c : d; k < first; k += c) added.push_back(k);
      return Proposal{SpectrumClass::periodic(c, residues, added), "excluded progression"};
    }
    if (e.kind == Expr::Kind::Power && e.var == iv && e.value >= 2) {
      return Proposal{SpectrumClass::geometric(to_nat(e.value),
                                               to_nat(ax.index_from + e.offset), 0, true),
                      "excluded powers"};
    }
  }

  if (is_atom(b, AtomKind::AtLeast) && grows(b.atom->expr, iv)) {
    return Proposal{SpectrumClass::empty(), "unbounded lower bound"};
  }

  if (b.kind == Node::Kind::Or) {
    // CONST or atleast(growing)
    std::vector<Node> rest;
    int growing = 0;
    for (const auto& k : b.kids) {
      if (is_atom(k, AtomKind::AtLeast) && grows(k.atom->expr, iv)) {
        ++growing;
      } else {
        rest.push_back(k);
      }
    }
    bool rest_constant = true;
    for (const auto& r : rest) rest_constant = rest_constant && !mentions_index(r, iv);
    if (growing == 1 && rest_constant && !rest.empty()) {
      Node alt;
      alt.kind = Node::Kind::Or;
      alt.kids = rest;
      if (rest.size() == 1) alt = rest[0];
      return Proposal{constant_spectrum(alt), "finite part plus unbounded lower bound"};
    }

    // atleast(P(n)) or bigor i=lo..n of exactly(P(i))
    if (b.kids.size() == 2) {
      const Node* lower = nullptr;
      const Node* big = nullptr;
      for (const auto& k : b.kids) {
        if (is_atom(k, AtomKind::AtLeast)) lower = &k;
        if (k.kind == Node::Kind::BigOr && k.atom->kind == AtomKind::Exactly) big = &k;
      }
      if (lower && big) {
        const Expr& le = lower->atom->expr;
        const Expr& be = big->atom->expr;
        if (le.kind == Expr::Kind::Power && be.kind == Expr::Kind::Power &&
            le.value == be.value && le.value >= 2 && be.var == big->big_var) {
          return Proposal{SpectrumClass::geometric(to_nat(be.value),
                                                   to_nat(big->big_lo + be.offset)),
                          "prefix of powers"};
        }
        if (le.kind == Expr::Kind::Step && be.kind == Expr::Kind::Step && env.step) {
          return Proposal{SpectrumClass::step_image(*env.step), "prefix of step image"};
        }
      }
    }
  }
  return std::nullopt;
}

// Agreement with direct evaluation on [1, upto]. A proposal whose source runs
// out before `upto` is checked as far as it goes.
bool verify(const SpectrumClass& s, const Axiom& ax, const Env& env, Nat upto) {
  Evaluator ev(env);
  for (Nat k = 1; k <= upto; ++k) {
    bool want;
    bool got;
    try {
      want = axiom_holds(ax, k, ev);
      got = s.member(k);
    } catch (const ExhaustedError&) {
      return true;
    }
    if (want != got) return false;
  }
  return true;
}

std::vector<Nat> prefix_gap(const std::vector<Nat>& excluded) {
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    if (excluded[i] != i + 1) return {};
  }
  return excluded;
}

std::optional<SpectrumClass> intersect(const SpectrumClass& x, const SpectrumClass& y) {
  auto as_finite = [](const SpectrumClass& f, const SpectrumClass& other) {
    std::vector<Nat> keep;
    for (Nat m : std::get<spec::Finite>(f.variant()).members) {
      if (other.member(m)) keep.push_back(m);
    }
    return SpectrumClass::finite(keep);
  };
  if (std::holds_alternative<spec::Finite>(x.variant())) return as_finite(x, y);
  if (std::holds_alternative<spec::Finite>(y.variant())) return as_finite(y, x);
  auto* cx = std::get_if<spec::Cofinite>(&x.variant());
  auto* cy = std::get_if<spec::Cofinite>(&y.variant());
  if (cx && cy) {
    std::vector<Nat> ex = cx->excluded;
    ex.insert(ex.end(), cy->excluded.begin(), cy->excluded.end());
    return SpectrumClass::cofinite(ex);
  }
  if (cy) std::swap(cx, cy);
  const SpectrumClass& other = cx == std::get_if<spec::Cofinite>(&x.variant()) ? y : x;
  if (cx) {
    if (auto* p = std::get_if<spec::Periodic>(&other.variant())) {
      std::vector<Nat> added, removed = p->removed;
      for (Nat a : p->added) {
        if (!std::binary_search(cx->excluded.begin(), cx->excluded.end(), a)) added.push_back(a);
      }
      for (Nat e : cx->excluded) {
        if (std::binary_search(p->residues.begin(), p->residues.end(), e % p->modulus) &&
            !std::binary_search(p->removed.begin(), p->removed.end(), e)) {
          removed.push_back(e);
        }
      }
      return SpectrumClass::periodic(p->modulus, p->residues, added, removed);
    }
    if (cx->excluded.empty()) return other;
    auto gap = prefix_gap(cx->excluded);
    if (!gap.empty()) return other.restrict_from(gap.back() + 1);
    return std::nullopt;
  }
  auto* px = std::get_if<spec::Periodic>(&x.variant());
  auto* py = std::get_if<spec::Periodic>(&y.variant());
  if (px && py && px->added.empty() && px->removed.empty() && py->added.empty() &&
      py->removed.empty()) {
    Nat l = std::lcm(px->modulus, py->modulus);
    std::vector<Nat> res;
    for (Nat r = 0; r < l; ++r) {
      if (std::binary_search(px->residues.begin(), px->residues.end(), r % px->modulus) &&
          std::binary_search(py->residues.begin(), py->residues.end(), r % py->modulus)) {
        res.push_back(r);
      }
    }
    return SpectrumClass::periodic(l, res);
  }
  return std::nullopt;
}

}  // namespace

Compiled compile_axioms(const Schema& s, const Env& env, const CompileOptions& opts) {
  Compiled out;
  out.admits_infinite = holds_at_infinity(s);
  if (s.axioms.empty()) {
    out.spectrum = SpectrumClass::cofinite({});
    out.method = "empty schema";
    return out;
  }
  std::optional<SpectrumClass> acc;
  std::vector<std::string> methods;
  bool ok = true;
  for (const auto& ax : s.axioms) {
    auto p = propose(ax, env);
    if (!p || !verify(p->spectrum, ax, env, opts.verify_upto)) {
      ok = false;
      out.warnings.push_back("no closed form for '" + ax.text + "'");
      break;
    }
    methods.push_back(p->method);
    if (!acc) {
      acc = p->spectrum;
    } else if (auto both = intersect(*acc, p->spectrum)) {
      acc = both;
    } else {
      ok = false;
      out.warnings.push_back("cannot intersect the closed forms of '" + ax.text +
                             "' with the preceding lines");
      break;
    }
  }
  if (ok) {
    out.spectrum = *acc;
    out.method.clear();
    for (std::size_t i = 0; i < methods.size(); ++i) {
      out.method += (i ? " + " : "") + methods[i];
    }
    return out;
  }
  if (!opts.allow_oracle_fallback) {
    throw SchemaError(out.warnings.back() + " and oracle fallback is disabled");
  }
  auto shared_schema = std::make_shared<Schema>(s);
  std::optional<SeqPair> bound;
  if (env.step) bound = *env.step;
  spec::OracleBacked o;
  o.label = "schema evaluation";
  o.computable = true;
  o.known_upto = opts.fallback_upto;
  o.predicate = [shared_schema, bound](Nat k) {
    Env e;
    if (bound) e.step = &*bound;
    return holds_at(*shared_schema, k, e);
  };
  out.spectrum = SpectrumClass::oracle(std::move(o));
  out.method = "oracle fallback";
  out.warnings.push_back("spectrum is evaluated instance by instance, not in closed form");
  return out;
}

}  // namespace specdens::schema
