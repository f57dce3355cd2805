#include <algorithm>
#include <functional>
#include <map>

#include "specdens/eqlogic.hpp"
#include "specdens/errors.hpp"

namespace specdens::eqlogic {

Arrangement::Arrangement(std::vector<std::vector<Var>> blocks)
    : blocks_(std::move(blocks)) {
  VarSet seen;
  for (const auto& b : blocks_) {
    if (b.empty()) throw Error("arrangement has an empty block");
    for (Var v : b) {
      if (!seen.insert(v).second) {
        throw Error("variable " + v.name() + " appears in two blocks");
      }
    }
  }
}

Arrangement Arrangement::from_rgs(const std::vector<Var>& vars,
                                  const std::vector<std::uint8_t>& rgs) {
  std::vector<std::vector<Var>> blocks;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (rgs[i] >= blocks.size()) blocks.resize(rgs[i] + 1);
    blocks[rgs[i]].push_back(vars[i]);
  }
  return Arrangement(std::move(blocks));
}

VarSet Arrangement::vars() const {
  VarSet vs;
  for (const auto& b : blocks_) vs.insert(b.begin(), b.end());
  return vs;
}

std::optional<std::size_t> Arrangement::block_of(Var v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::find(blocks_[i].begin(), blocks_[i].end(), v) != blocks_[i].end()) {
      return i;
    }
  }
  return std::nullopt;
}

bool Arrangement::related(Var x, Var y) const {
  auto bx = block_of(x);
  auto by = block_of(y);
  if (!bx) throw UnboundVariable("variable " + x.name() + " is not arranged");
  if (!by) throw UnboundVariable("variable " + y.name() + " is not arranged");
  return *bx == *by;
}

namespace {

std::vector<std::vector<Var>> normalized(const Arrangement& a) {
  auto blocks = a.blocks();
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

bool operator==(const Arrangement& a, const Arrangement& b) {
  return normalized(a) == normalized(b);
}

std::ostream& operator<<(std::ostream& out, const Arrangement& a) {
  out << '{';
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    if (i) out << ',';
    out << '{';
    for (std::size_t j = 0; j < a.blocks()[i].size(); ++j) {
      if (j) out << ',';
      out << a.blocks()[i][j].name();
    }
    out << '}';
  }
  return out << '}';
}

ArrangementStream::ArrangementStream(const VarSet& vars, const Limits& limits)
    : vars_(vars.begin(), vars.end()) {
  if (vars_.size() > limits.var_cap) {
    throw CapError("arrangement enumeration over " + std::to_string(vars_.size()) +
                   " variables exceeds the cap of " +
                   std::to_string(limits.var_cap));
  }
  if (vars_.size() > 255) throw CapError("too many variables to enumerate");
  rgs_.assign(vars_.size(), 0);
  prefix_max_.assign(vars_.size(), 0);
}

std::optional<Arrangement> ArrangementStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Arrangement::from_rgs(vars_, rgs_);
  }
  // prefix_max_[i] is the largest entry strictly before position i.
  std::size_t n = rgs_.size();
  for (std::size_t i = n; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i]) {
      ++rgs_[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j - 1]);
      }
      return Arrangement::from_rgs(vars_, rgs_);
    }
  }
  done_ = true;
  return std::nullopt;
}

ArrangementStream arrangements(const VarSet& vars, const Limits& limits) {
  return ArrangementStream(vars, limits);
}

namespace {

// Flattened formula over variable indices, for the hot loop of
// min_model_size.
struct Compiled {
  struct Node {
    Kind kind;
    std::uint16_t x = 0, y = 0;
    std::vector<std::uint32_t> kids;
  };
  std::vector<Node> nodes;

  std::uint32_t add(const Formula& f, const std::map<Var, std::uint16_t>& index) {
    Node n{f.kind(), 0, 0, {}};
    if (f.kind() == Kind::Eq) {
      n.x = index.at(f.lhs());
      n.y = index.at(f.rhs());
    } else {
      for (const auto& c : f.children()) n.kids.push_back(add(c, index));
    }
    nodes.push_back(std::move(n));
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }

  bool eval(std::uint32_t id, const std::uint8_t* block) const {
    const Node& n = nodes[id];
    switch (n.kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Eq: return block[n.x] == block[n.y];
      case Kind::Not: return !eval(n.kids[0], block);
      case Kind::And:
        for (auto k : n.kids) {
          if (!eval(k, block)) return false;
        }
        return true;
      case Kind::Or:
        for (auto k : n.kids) {
          if (eval(k, block)) return true;
        }
        return false;
    }
    return false;
  }
};

}  // namespace

bool eval_under(const Formula& f, const Arrangement& a) {
  std::map<Var, std::uint8_t> block;
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    for (Var v : a.blocks()[i]) block[v] = static_cast<std::uint8_t>(i);
  }
  auto lookup = [&](Var v) {
    auto it = block.find(v);
    if (it == block.end()) {
      throw UnboundVariable("variable " + v.name() + " is not arranged");
    }
    return it->second;
  };
  std::function<bool(const Formula&)> go = [&](const Formula& g) -> bool {
    switch (g.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Eq: return lookup(g.lhs()) == lookup(g.rhs());
      case Kind::Not: return !go(g.children()[0]);
      case Kind::And:
        for (const auto& c : g.children()) {
          if (!go(c)) return false;
        }
        return true;
      case Kind::Or:
        for (const auto& c : g.children()) {
          if (go(c)) return true;
        }
        return false;
    }
    return false;
  };
  // Check every variable up front so an unbound one is reported even when
  // short-circuiting would skip it.
  for (Var v : free_vars(f)) lookup(v);
  return go(f);
}

Formula arrangement_formula(const Arrangement& a) {
  std::vector<Formula> parts;
  const auto& blocks = a.blocks();
  for (const auto& b : blocks) {
    for (std::size_t j = 1; j < b.size(); ++j) parts.push_back(Formula::eq(b[0], b[j]));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (Var x : blocks[i]) {
        for (Var y : blocks[j]) parts.push_back(Formula::neg(Formula::eq(x, y)));
      }
    }
  }
  if (parts.size() == 1) return parts[0];
  return Formula::conj(std::move(parts));
}

ExtNat min_model_size(const Formula& f, const Limits& limits) {
  VarSet vs = free_vars(f);
  if (vs.size() > limits.var_cap) {
    throw CapError("formula has " + std::to_string(vs.size()) +
                   " variables, above the cap of " + std::to_string(limits.var_cap));
  }
  std::map<Var, std::uint16_t> index;
  for (Var v : vs) index.emplace(v, static_cast<std::uint16_t>(index.size()));
  Compiled c;
  std::uint32_t root = c.add(f, index);

  const std::size_t n = vs.size();
  if (n == 0) return c.eval(root, nullptr) ? ExtNat(1) : ExtNat::infinite();

  std::vector<std::uint8_t> rgs(n, 0), pmax(n, 0);
  std::size_t best = n + 1;
  while (true) {
    std::size_t blocks = std::max(pmax[n - 1], rgs[n - 1]) + 1u;
    if (blocks < best && c.eval(root, rgs.data())) {
      best = blocks;
      if (best == 1) break;
    }
    std::size_t i = n;
    while (i-- > 1 && rgs[i] > pmax[i]) {
    }
    if (i == 0 || i >= n) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      pmax[j] = std::max(pmax[j - 1], rgs[j - 1]);
    }
  }
  if (best == n + 1) return ExtNat::infinite();
  return ExtNat(best);
}

bool sat_at(const Formula& f, Nat n, const Limits& limits) {
  if (n == 0) throw Error("sat_at needs a positive domain size");
  return min_model_size(f, limits) <= ExtNat(n);
}

}  // namespace specdens::eqlogic
