#include "specdens/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>

#include "specdens/errors.hpp"

namespace specdens {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Finite: return "finite";
    case Shape::Cofinite: return "cofinite";
    case Shape::Neither: return "neither";
    case Shape::Unknown: return "unknown";
  }
  return "?";
}

namespace spec {

// Lazily extended table of blocks for StepImage (block i spans b_i slots,
// the first a_i of which are members) and GStep (2*b_i slots, 2*a_i ones).
// Entries are a pure function of the index, so concurrent extension by
// different callers is harmless; the mutex only protects the vector.
class BlockCache {
 public:
  struct Block {
    Nat start = 0;        // positions start+1 .. start+len
    BigInt a, b;
    BigInt len;
    Nat ones_before = 0;  // members at positions <= start
    bool bit = true;
  };

  BlockCache(SeqPair seq, bool doubled, std::vector<bool> bits)
      : seq_(std::move(seq)), doubled_(doubled), bits_(std::move(bits)) {}

  // Index of the block holding position n >= 1.
  std::size_t locate(Nat n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (blocks_.empty() || end_of(blocks_.back()) < n) extend();
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), n,
                               [](Nat v, const Block& b) { return v <= b.start; });
    return static_cast<std::size_t>(it - blocks_.begin()) - 1;
  }

  // Index of the block holding the j-th member, j >= 1.
  std::size_t locate_member(Nat j) {
    std::lock_guard<std::mutex> lock(mu_);
    while (blocks_.empty() ||
           BigInt(blocks_.back().ones_before) + ones_of(blocks_.back()) < j) {
      extend();
    }
    auto it = std::upper_bound(
        blocks_.begin(), blocks_.end(), j,
        [](Nat v, const Block& b) { return v <= b.ones_before; });
    return static_cast<std::size_t>(it - blocks_.begin()) - 1;
  }

  Block get(std::size_t i) {
    std::lock_guard<std::mutex> lock(mu_);
    while (blocks_.size() <= i) extend();
    return blocks_[i];
  }

  bool doubled() const { return doubled_; }

  BigInt ones_of(const Block& b) const { return doubled_ ? 2 * b.a : b.a; }

  // Offsets are 1-based within the block.
  bool member_at(const Block& blk, Nat t) const {
    if (!doubled_) return BigInt(t) <= blk.a;
    BigInt gap = 2 * (blk.b - blk.a);
    if (blk.bit) return t == 1 || BigInt(t) >= gap + 2;
    return BigInt(t) >= gap + 1;
  }

  Nat count_in(const Block& blk, Nat t) const {
    if (!doubled_) return BigInt(t) < blk.a ? t : to_nat(blk.a);
    BigInt gap = 2 * (blk.b - blk.a);
    BigInt c = 0;
    if (blk.bit) {
      c = (t >= 1 ? 1 : 0);
      if (BigInt(t) > gap + 1) c += BigInt(t) - gap - 1;
    } else if (BigInt(t) > gap) {
      c = BigInt(t) - gap;
    }
    return to_nat(c);
  }

  std::optional<Nat> next_in(const Block& blk, Nat t) const {
    if (!doubled_) {
      if (BigInt(t) <= blk.a) return t;
      return std::nullopt;
    }
    BigInt gap = 2 * (blk.b - blk.a);
    BigInt first_run = blk.bit ? gap + 2 : gap + 1;
    if (blk.bit && t <= 1) return Nat(1);
    if (BigInt(t) > blk.len) return std::nullopt;
    if (BigInt(t) >= first_run) return t;
    return to_nat(first_run);
  }

  // Offset of the j-th member within the block.
  Nat nth_in(const Block& blk, Nat j) const {
    if (!doubled_) return j;
    BigInt gap = 2 * (blk.b - blk.a);
    if (blk.bit && j == 1) return 1;
    return to_nat(gap + j);
  }

 private:
  static BigInt end_of(const Block& b) { return BigInt(b.start) + b.len; }

  void extend() {
    std::size_t i = blocks_.size();
    Block blk;
    if (i > 0) {
      const Block& prev = blocks_.back();
      BigInt start = end_of(prev);
      if (start > std::numeric_limits<Nat>::max()) {
        throw OverflowError("block layout passes the 64-bit range");
      }
      blk.start = static_cast<Nat>(start);
      BigInt before = BigInt(prev.ones_before) + ones_of(prev);
      blk.ones_before = to_nat(before);
    }
    auto [a, b] = seq_.at(i);
    blk.a = a;
    blk.b = b;
    blk.len = doubled_ ? 2 * b : b;
    if (doubled_) {
      if (i >= bits_.size()) {
        throw ExhaustedError("bit source has only " + std::to_string(bits_.size()) +
                             " bits, block " + std::to_string(i) + " needs one more");
      }
      blk.bit = bits_[i];
    }
    blocks_.push_back(std::move(blk));
  }

  SeqPair seq_;
  bool doubled_;
  std::vector<bool> bits_;
  std::mutex mu_;
  std::vector<Block> blocks_;
};

}  // namespace spec

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr Nat kNatMax = std::numeric_limits<Nat>::max();

std::vector<Nat> sorted_unique(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_positive(const std::vector<Nat>& v, const char* what) {
  for (Nat x : v) {
    if (x == 0) throw Error(std::string(what) + " must be positive naturals");
  }
}

bool contains(const std::vector<Nat>& v, Nat x) {
  return std::binary_search(v.begin(), v.end(), x);
}

Nat count_le(const std::vector<Nat>& v, Nat n) {
  return static_cast<Nat>(std::upper_bound(v.begin(), v.end(), n) - v.begin());
}

bool in_pattern(const spec::Periodic& p, Nat n) {
  return contains(p.residues, n % p.modulus);
}

// |{1 <= x <= n : x mod m == r}|
Nat residue_count(Nat n, Nat m, Nat r) {
  if (r == 0) return n / m;
  if (r > n) return 0;
  return (n - r) / m + 1;
}

// Powers base^i + shift with i >= e0, as a sorted list up to `limit`.
std::vector<Nat> geometric_terms(const spec::Geometric& g, Nat limit) {
  std::vector<Nat> out;
  BigInt p = boost::multiprecision::pow(BigInt(g.base), static_cast<unsigned>(g.min_exponent));
  while (p + g.shift <= limit) {
    out.push_back(static_cast<Nat>(p + g.shift));
    p *= g.base;
  }
  return out;
}

bool in_geometric(const spec::Geometric& g, Nat n) {
  if (n <= g.shift) return false;
  Nat x = n - g.shift;
  Nat e = 0;
  while (x % g.base == 0) {
    x /= g.base;
    ++e;
  }
  return x == 1 && e >= g.min_exponent;
}

Nat geometric_count(const spec::Geometric& g, Nat n) {
  return static_cast<Nat>(geometric_terms(g, n).size());
}

bool oracle_member(const spec::OracleBacked& o, Nat n) {
  if (n <= o.known_upto || !o.predicate) {
    if (n > o.known_upto) {
      throw OracleError("oracle '" + o.label + "' knows membership only up to " +
                        std::to_string(o.known_upto) + ", asked about " +
                        std::to_string(n));
    }
    for (const auto& [lo, hi] : o.intervals) {
      if (lo <= n && n <= hi) return true;
    }
    if (o.predicate) return o.predicate(n);
    return false;
  }
  return o.predicate(n);
}

}  // namespace

SpectrumClass SpectrumClass::finite(std::vector<Nat> members) {
  members = sorted_unique(std::move(members));
  require_positive(members, "spectrum members");
  return SpectrumClass(spec::Finite{std::move(members)});
}

SpectrumClass SpectrumClass::cofinite(std::vector<Nat> excluded) {
  excluded = sorted_unique(std::move(excluded));
  require_positive(excluded, "excluded sizes");
  return SpectrumClass(spec::Cofinite{std::move(excluded)});
}

SpectrumClass SpectrumClass::periodic(Nat modulus, std::vector<Nat> residues,
                                      std::vector<Nat> added,
                                      std::vector<Nat> removed) {
  if (modulus == 0) throw Error("periodic spectrum needs a modulus >= 1");
  spec::Periodic p{modulus, sorted_unique(std::move(residues)),
                   sorted_unique(std::move(added)), sorted_unique(std::move(removed))};
  for (Nat r : p.residues) {
    if (r >= modulus) throw Error("residue " + std::to_string(r) + " is not below the modulus");
  }
  require_positive(p.added, "added sizes");
  require_positive(p.removed, "removed sizes");
  for (Nat x : p.added) {
    if (in_pattern(p, x)) {
      throw Error("added size " + std::to_string(x) + " already follows the residue pattern");
    }
  }
  for (Nat x : p.removed) {
    if (!in_pattern(p, x)) {
      throw Error("removed size " + std::to_string(x) + " is not in the residue pattern");
    }
  }
  return SpectrumClass(std::move(p));
}

SpectrumClass SpectrumClass::geometric(Nat base, Nat min_exponent, Nat shift,
                                       bool complemented) {
  if (base < 2) throw Error("geometric spectrum needs a base >= 2");
  return SpectrumClass(spec::Geometric{base, min_exponent, shift, complemented});
}

SpectrumClass SpectrumClass::step_image(SeqPair seq) {
  auto cache = std::make_shared<spec::BlockCache>(seq, false, std::vector<bool>{});
  return SpectrumClass(spec::StepImage{std::move(seq), std::move(cache)});
}

SpectrumClass g_construction(const SeqPair& sp, std::vector<bool> bits,
                             bool bits_computable) {
  auto cache = std::make_shared<spec::BlockCache>(sp, true, bits);
  return SpectrumClass(spec::GStep{sp, std::move(bits), bits_computable, std::move(cache)});
}

SpectrumClass SpectrumClass::oracle(spec::OracleBacked o) {
  std::sort(o.intervals.begin(), o.intervals.end());
  for (const auto& [lo, hi] : o.intervals) {
    if (lo == 0 || lo > hi) throw Error("oracle interval must satisfy 1 <= lo <= hi");
  }
  if (o.declared_density &&
      (*o.declared_density < 0 || *o.declared_density > 1)) {
    throw Error("declared density must lie in [0,1]");
  }
  return SpectrumClass(std::move(o));
}

std::string SpectrumClass::kind_name() const {
  static const char* names[] = {"finite", "cofinite", "periodic", "geometric",
                                "step_image", "g_step", "oracle"};
  return names[v_.index()];
}

namespace {

std::string list(const std::vector<Nat>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string SpectrumClass::describe() const {
  std::string body = std::visit(
      overloaded{
          [](const spec::Finite& f) { return "finite " + list(f.members); },
          [](const spec::Cofinite& c) {
            return c.excluded.empty() ? std::string("all positive sizes")
                                      : "all sizes except " + list(c.excluded);
          },
          [](const spec::Periodic& p) {
            std::string s = "sizes mod " + std::to_string(p.modulus) + " in " + list(p.residues);
            if (!p.added.empty()) s += ", plus " + list(p.added);
            if (!p.removed.empty()) s += ", minus " + list(p.removed);
            return s;
          },
          [](const spec::Geometric& g) {
            std::string s = std::to_string(g.base) + "^i";
            if (g.shift) s += "+" + std::to_string(g.shift);
            s += " for i >= " + std::to_string(g.min_exponent);
            return g.complemented ? "all sizes except " + s : s;
          },
          [](const spec::StepImage& s) { return "step image of " + s.seq.describe(); },
          [](const spec::GStep& g) {
            std::string bits;
            for (bool b : g.bits) bits += b ? '1' : '0';
            return "G-construction over " + g.seq.describe() + ", g=" + bits +
                   (g.bits_computable ? "" : " [non-computable]");
          },
          [](const spec::OracleBacked& o) {
            return "oracle '" + o.label + "' (known up to " +
                   std::to_string(o.known_upto) + ")";
          },
      },
      v_);
  if (floor_ > 1) body += ", from " + std::to_string(floor_);
  return body;
}

namespace {

// Raw (floor-free) operations per variant.
struct Raw {
  const SpectrumClass::Variant& v;

  bool member(Nat n) const {
    return std::visit(
        overloaded{
            [n](const spec::Finite& f) { return contains(f.members, n); },
            [n](const spec::Cofinite& c) { return !contains(c.excluded, n); },
            [n](const spec::Periodic& p) {
              if (contains(p.added, n)) return true;
              if (contains(p.removed, n)) return false;
              return in_pattern(p, n);
            },
            [n](const spec::Geometric& g) { return in_geometric(g, n) != g.complemented; },
            [n](const spec::StepImage& s) {
              auto i = s.cache->locate(n);
              auto blk = s.cache->get(i);
              return s.cache->member_at(blk, n - blk.start);
            },
            [n](const spec::GStep& g) {
              auto i = g.cache->locate(n);
              auto blk = g.cache->get(i);
              return g.cache->member_at(blk, n - blk.start);
            },
            [n](const spec::OracleBacked& o) { return oracle_member(o, n); },
        },
        v);
  }

  Nat count(Nat n) const {
    if (n == 0) return 0;
    return std::visit(
        overloaded{
            [n](const spec::Finite& f) { return count_le(f.members, n); },
            [n](const spec::Cofinite& c) { return n - count_le(c.excluded, n); },
            [n](const spec::Periodic& p) {
              Nat c = 0;
              for (Nat r : p.residues) c += residue_count(n, p.modulus, r);
              return c + count_le(p.added, n) - count_le(p.removed, n);
            },
            [n](const spec::Geometric& g) {
              Nat c = geometric_count(g, n);
              return g.complemented ? n - c : c;
            },
            [n](const spec::StepImage& s) {
              auto blk = s.cache->get(s.cache->locate(n));
              return blk.ones_before + s.cache->count_in(blk, n - blk.start);
            },
            [n](const spec::GStep& g) {
              auto blk = g.cache->get(g.cache->locate(n));
              return blk.ones_before + g.cache->count_in(blk, n - blk.start);
            },
            [this, n](const spec::OracleBacked& o) {
              Nat c = 0;
              for (Nat k = 1; k <= n; ++k) c += member(k) ? 1 : 0;
              (void)o;
              return c;
            },
        },
        v);
  }

  std::optional<Nat> next(Nat k) const {
    if (k == 0) k = 1;
    return std::visit(
        overloaded{
            [k](const spec::Finite& f) -> std::optional<Nat> {
              auto it = std::lower_bound(f.members.begin(), f.members.end(), k);
              if (it == f.members.end()) return std::nullopt;
              return *it;
            },
            [k](const spec::Cofinite& c) -> std::optional<Nat> {
              Nat n = k;
              while (contains(c.excluded, n)) ++n;
              return n;
            },
            [this, k](const spec::Periodic& p) -> std::optional<Nat> {
              if (p.residues.empty()) {
                auto it = std::lower_bound(p.added.begin(), p.added.end(), k);
                if (it == p.added.end()) return std::nullopt;
                return *it;
              }
              for (Nat n = k;; ++n) {
                if (member(n)) return n;
              }
            },
            [this, k](const spec::Geometric& g) -> std::optional<Nat> {
              if (g.complemented) {
                for (Nat n = k;; ++n) {
                  if (member(n)) return n;
                }
              }
              BigInt p = boost::multiprecision::pow(BigInt(g.base),
                                                    static_cast<unsigned>(g.min_exponent));
              while (p + g.shift < k) p *= g.base;
              return to_nat(p + g.shift);
            },
            [k](const spec::StepImage& s) -> std::optional<Nat> {
              auto i = s.cache->locate(k);
              auto blk = s.cache->get(i);
              if (auto t = s.cache->next_in(blk, k - blk.start)) return blk.start + *t;
              auto nb = s.cache->get(i + 1);
              return nb.start + *s.cache->next_in(nb, 1);
            },
            [k](const spec::GStep& g) -> std::optional<Nat> {
              auto i = g.cache->locate(k);
              auto blk = g.cache->get(i);
              if (auto t = g.cache->next_in(blk, k - blk.start)) return blk.start + *t;
              auto nb = g.cache->get(i + 1);
              return nb.start + *g.cache->next_in(nb, 1);
            },
            [this, k](const spec::OracleBacked& o) -> std::optional<Nat> {
              if (o.shape == Shape::Finite && !o.predicate) {
                for (const auto& [lo, hi] : o.intervals) {
                  if (hi >= k) return std::max(lo, k);
                }
                return std::nullopt;
              }
              for (Nat n = k; n - k <= o.search_cap; ++n) {
                if (member(n)) return n;
              }
              throw InconclusiveError("oracle '" + o.label + "' has no member in [" +
                                      std::to_string(k) + ", " +
                                      std::to_string(k + o.search_cap) + "]");
            },
        },
        v);
  }
};

}  // namespace

bool SpectrumClass::member(Nat n) const {
  if (n == 0 || n < floor_) return false;
  return Raw{v_}.member(n);
}

Nat SpectrumClass::count_upto(Nat n) const {
  if (n < floor_) return 0;
  Raw raw{v_};
  return raw.count(n) - raw.count(floor_ - 1);
}

std::optional<Nat> SpectrumClass::next_member(Nat k) const {
  return Raw{v_}.next(std::max(k, floor_));
}

std::optional<Nat> SpectrumClass::nth_element(Nat j) const {
  if (j == 0) throw Error("nth_element is 1-based");
  if (auto* f = std::get_if<spec::Finite>(&v_)) {
    Nat skip = count_le(f->members, floor_ - 1);
    if (skip + j > f->members.size()) return std::nullopt;
    return f->members[skip + j - 1];
  }
  auto step = [&](const auto& s) -> std::optional<Nat> {
    Nat target = checked_add(j, Raw{v_}.count(floor_ - 1));
    auto i = s.cache->locate_member(target);
    auto blk = s.cache->get(i);
    return blk.start + s.cache->nth_in(blk, target - blk.ones_before);
  };
  if (auto* s = std::get_if<spec::StepImage>(&v_)) return step(*s);
  if (auto* g = std::get_if<spec::GStep>(&v_)) return step(*g);
  // Walk member by member; every remaining kind has a cheap next_member.
  std::optional<Nat> cur = next_member(1);
  for (Nat i = 1; cur && i < j; ++i) {
    if (*cur == kNatMax) return std::nullopt;
    cur = next_member(*cur + 1);
  }
  return cur;
}

Tri SpectrumClass::bounded() const {
  switch (shape()) {
    case Shape::Finite: return Tri::Yes;
    case Shape::Cofinite:
    case Shape::Neither: return Tri::No;
    case Shape::Unknown: return Tri::Unknown;
  }
  return Tri::Unknown;
}

std::optional<Nat> SpectrumClass::max_member() const {
  if (bounded() != Tri::Yes) return std::nullopt;
  std::optional<Nat> top;
  std::visit(overloaded{
                 [&](const spec::Finite& f) {
                   if (!f.members.empty()) top = f.members.back();
                 },
                 [&](const spec::Periodic& p) {
                   if (!p.added.empty()) top = p.added.back();
                 },
                 [&](const spec::OracleBacked& o) {
                   if (!o.intervals.empty()) top = o.intervals.back().second;
                 },
                 [](const auto&) {},
             },
             v_);
  if (top && *top < floor_) return std::nullopt;
  return top;
}

namespace {
// A closed-form tail on both sides denotes an infinite pair even when the
// known part of a digit source runs out.
bool open_ended(const SeqPair& sp) { return sp.a().tail() && sp.b().tail(); }
}  // namespace

Shape SpectrumClass::shape() const {
  return std::visit(
      overloaded{
          [](const spec::Finite&) { return Shape::Finite; },
          [](const spec::Cofinite&) { return Shape::Cofinite; },
          [](const spec::Periodic& p) {
            if (p.residues.empty()) return Shape::Finite;
            if (p.residues.size() == p.modulus) return Shape::Cofinite;
            return Shape::Neither;
          },
          [](const spec::Geometric&) { return Shape::Neither; },
          [](const spec::StepImage& s) {
            return open_ended(s.seq) ? Shape::Neither : Shape::Unknown;
          },
          [](const spec::GStep& g) {
            return open_ended(g.seq) ? Shape::Neither : Shape::Unknown;
          },
          [](const spec::OracleBacked& o) { return o.shape; },
      },
      v_);
}

std::optional<Nat> SpectrumClass::upper_interval_start() const {
  if (shape() != Shape::Cofinite) return std::nullopt;
  const std::vector<Nat>* holes = nullptr;
  if (auto* c = std::get_if<spec::Cofinite>(&v_)) holes = &c->excluded;
  if (auto* p = std::get_if<spec::Periodic>(&v_)) holes = &p->removed;
  if (!holes) return std::nullopt;
  auto m = next_member(1);
  if (!m) return std::nullopt;
  if (!holes->empty() && holes->back() > *m) return std::nullopt;
  return m;
}

Tri SpectrumClass::has_internal_gap() const {
  switch (shape()) {
    case Shape::Neither: return Tri::Yes;
    case Shape::Unknown: return Tri::Unknown;
    case Shape::Cofinite:
      if (!std::holds_alternative<spec::Cofinite>(v_) &&
          !std::holds_alternative<spec::Periodic>(v_)) {
        return Tri::Unknown;
      }
      return upper_interval_start() || !next_member(1) ? Tri::No : Tri::Yes;
    case Shape::Finite: break;
  }
  std::vector<Nat> members;
  if (auto* f = std::get_if<spec::Finite>(&v_)) {
    members = f->members;
  } else if (auto* p = std::get_if<spec::Periodic>(&v_)) {
    members = p->added;
  } else if (auto* o = std::get_if<spec::OracleBacked>(&v_)) {
    if (o->predicate) return Tri::Unknown;
    // Intervals are sorted; a gap is a pair of non-touching neighbours.
    std::vector<std::pair<Nat, Nat>> iv;
    for (auto [lo, hi] : o->intervals) {
      lo = std::max(lo, floor_);
      if (lo > hi) continue;
      if (!iv.empty() && lo <= iv.back().second + 1) {
        iv.back().second = std::max(iv.back().second, hi);
      } else {
        iv.emplace_back(lo, hi);
      }
    }
    return iv.size() > 1 ? Tri::Yes : Tri::No;
  }
  members.erase(std::remove_if(members.begin(), members.end(),
                               [&](Nat x) { return x < floor_; }),
                members.end());
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i] != members[i - 1] + 1) return Tri::Yes;
  }
  return Tri::No;
}

Tri SpectrumClass::computable() const {
  return std::visit(
      overloaded{
          [](const spec::StepImage& s) {
            if (!s.seq.a().computable()) return s.seq.b().computable() ? Tri::No : Tri::Unknown;
            return s.seq.b().computable() ? Tri::Yes : Tri::Unknown;
          },
          [](const spec::GStep& g) {
            if (!g.seq.computable()) return Tri::Unknown;
            return g.bits_computable ? Tri::Yes : Tri::No;
          },
          [](const spec::OracleBacked& o) { return o.computable ? Tri::Unknown : Tri::No; },
          [](const auto&) { return Tri::Yes; },
      },
      v_);
}

SpectrumClass SpectrumClass::restrict_from(Nat m) const {
  if (m <= floor_) return *this;
  if (auto* f = std::get_if<spec::Finite>(&v_)) {
    std::vector<Nat> keep;
    for (Nat x : f->members) {
      if (x >= m) keep.push_back(x);
    }
    return finite(std::move(keep));
  }
  if (auto* c = std::get_if<spec::Cofinite>(&v_)) {
    std::vector<Nat> ex = c->excluded;
    for (Nat x = 1; x < m; ++x) ex.push_back(x);
    return cofinite(std::move(ex));
  }
  if (auto* p = std::get_if<spec::Periodic>(&v_)) {
    std::vector<Nat> added, removed;
    for (Nat x : p->added) {
      if (x >= m) added.push_back(x);
    }
    for (Nat x : p->removed) removed.push_back(x);
    for (Nat x = 1; x < m; ++x) {
      if (in_pattern(*p, x)) removed.push_back(x);
    }
    return periodic(p->modulus, p->residues, std::move(added), std::move(removed));
  }
  SpectrumClass out = *this;
  out.floor_ = m;
  return out;
}

bool SpectrumClass::equal_upto(const SpectrumClass& other, Nat n) const {
  for (Nat k = 1; k <= n; ++k) {
    if (member(k) != other.member(k)) return false;
  }
  return true;
}

Nat step_function(const SeqPair& sp, Nat n) {
  if (n == 0) throw Error("the step function is defined on positive naturals");
  BigInt m = 0;
  for (std::size_t i = 0;; ++i) {
    auto [a, b] = sp.at(i);
    if (n <= m + b) return n <= m + a ? n : to_nat(m + a);
    m += b;
  }
}

bool g_value(const SeqPair& sp, const std::vector<bool>& bits, Nat n) {
  if (n == 0) throw Error("G is defined on positive naturals");
  BigInt m = 0;
  for (std::size_t i = 0;; ++i) {
    auto [a, b] = sp.at(i);
    if (n <= m + 2 * b) {
      if (i >= bits.size()) throw ExhaustedError("bit source exhausted at block " + std::to_string(i));
      BigInt t = n - m;
      BigInt gap = 2 * (b - a);
      return bits[i] ? (t == 1 || t >= gap + 2) : t >= gap + 1;
    }
    m += 2 * b;
  }
}

}  // namespace specdens
