#include "specdens/zoo.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "specdens/errors.hpp"
#include "specdens/schema.hpp"

namespace specdens {

namespace {

constexpr Tri T = Tri::Yes, F = Tri::No;

struct Builder {
  ZooEntry e;

  Builder(std::string key, std::string display, std::string description) {
    e.key = std::move(key);
    e.display = std::move(display);
    e.description = std::move(description);
  }

  Builder& from_schema(const std::string& text, const SeqPair* step = nullptr) {
    schema::CompileOptions opts;
    opts.allow_oracle_fallback = false;
    auto c = schema::compile_axioms(schema::parse(text), schema::Env{step}, opts);
    e.theory = Theory::make(e.display, std::move(c.spectrum), c.admits_infinite);
    e.axioms = text;
    e.method = "compiled axioms (" + c.method + ")";
    return *this;
  }

  Builder& direct(SpectrumClass s, bool inf, std::string method) {
    e.theory = Theory::make(e.display, std::move(s), inf);
    e.method = std::move(method);
    return *this;
  }

  Builder& density(DensityValue d) {
    e.expected_density = std::move(d);
    return *this;
  }

  Builder& cell(Property p, Tri v, std::string note) {
    e.expected[p] = {v, std::move(note)};
    return *this;
  }

  // All seven cells of a published table row.
  Builder& row(int id, const std::string& note) {
    const auto& rows = table1_rows();
    const TableRow& r = rows.at(id - 1);
    for (std::size_t i = 0; i < kProperties.size(); ++i) {
      cell(kProperties[i], r.cells[i], "table row " + std::to_string(id) + ": " + note);
    }
    e.table_row = id;
    e.anomalies = r.anomalies;
    return *this;
  }

  Builder& note(std::string n) {
    e.notes.push_back(std::move(n));
    return *this;
  }
};

DensityValue exact(long p, long q = 1) { return DensityValue::exact(Rational(p, q)); }

const char* kStepSchema = "forall n in N*: atleast(f(n+1)) or bigor i=1..n of exactly(f(i))";

// Stand-in for a non-computable bit source: fixed data beginning 1,1,0 so the
// first blocks reproduce the worked G example.
std::vector<bool> row5_bits() {
  std::vector<bool> bits = {true, true, false};
  std::uint32_t x = 0x9e3779b9u;
  while (bits.size() < 512) {
    x ^= x << 13;
    x ^= x >> 17;
    x ^= x << 5;
    bits.push_back(x & 1u);
  }
  return bits;
}

std::vector<ZooEntry> make_zoo() {
  std::vector<ZooEntry> zoo;
  auto add = [&](Builder& b) { zoo.push_back(std::move(b.e)); };

  for (int n = 1; n <= 3; ++n) {
    Builder b("geq" + std::to_string(n), "T_>=" + std::to_string(n),
              "all structures with at least " + std::to_string(n) + " elements");
    b.from_schema("atleast(" + std::to_string(n) + ")").density(exact(1));
    if (n == 1) {
      b.row(1, "trivial theory, strongly finitely witnessable");
    } else {
      b.cell(Property::SI, T, "has infinite models")
          .cell(Property::SM, T, "spectrum is an upper interval")
          .cell(Property::FMP, T, "unbounded spectrum");
    }
    add(b);
  }

  {
    Builder b("leq3", "T_<=3", "at most three elements, with the strong witness adding three variables");
    b.from_schema("atmost(3)")
        .density(exact(0))
        .cell(Property::SI, F, "no infinite models")
        .cell(Property::SW, T, "strong witness adds x1=x1, x2=x2, x3=x3");
    add(b);
  }
  {
    Builder b("even_inf", "T_even^inf", "even sizes, plus infinite models");
    b.from_schema("forall n in N: not exactly(2*n+1)")
        .density(exact(1, 2))
        .cell(Property::SI, T, "has infinite models")
        .cell(Property::SM, F, "finite model property without smoothness")
        .cell(Property::FMP, T, "finite model property without smoothness")
        .cell(Property::SW, F, "not strongly finitely witnessable")
        .cell(Property::G, F, "density 1/2 rules out gentleness");
    add(b);
  }
  {
    Builder b("pow2", "T_=2^i", "sizes that are powers of two, plus infinite models");
    b.from_schema("forall n in N: atleast(2^n) or bigor i=0..n of exactly(2^i)")
        .density(exact(0))
        .cell(Property::SI, T, "has infinite models")
        .cell(Property::FMP, T, "unbounded spectrum")
        .cell(Property::FW, T, "witness adds 2^n tautologies")
        .cell(Property::CF, T, "computable spectrum")
        .cell(Property::SM, F, "spectrum has gaps")
        .cell(Property::SW, F, "not strongly finitely witnessable")
        .cell(Property::G, F, "spectrum neither finite nor cofinite");
    add(b);
  }
  {
    Builder b("nonpow2", "T_!=2^i", "sizes that are not powers of two, plus infinite models");
    b.from_schema("forall n in N: not exactly(2^n)")
        .density(exact(1))
        .cell(Property::CF, T, "computable spectrum")
        .cell(Property::G, F, "spectrum neither finite nor cofinite");
    add(b);
  }
  {
    Builder b("inf", "T_inf", "only infinite models");
    b.from_schema("forall n in N*: atleast(n)").density(exact(0)).row(2, "smooth without the finite model property");
    add(b);
  }
  for (int n = 1; n <= 3; ++n) {
    Builder b("n_inf" + std::to_string(n), "T_" + std::to_string(n) + ",inf",
              "finite models of size " + std::to_string(n) + " only, plus infinite models");
    b.from_schema("forall m in N*: exactly(" + std::to_string(n) + ") or atleast(m)")
        .density(exact(0))
        .row(7, "neither smooth nor with the finite model property");
    add(b);
  }
  {
    Builder b("I", "T_I", "a single model with one element");
    b.from_schema("exactly(1)")
        .density(exact(0))
        .row(8, "strongly finitely witnessable, hence gentle")
        .note("the published FMP cell reads F, but every model of the theory is finite");
    add(b);
  }
  {
    Builder b("m_n", "T_<2,5>", "models of size 2 or 5");
    b.from_schema("exactly(2) or exactly(5)").density(exact(0)).row(9, "gentle, density 0, not strongly finitely witnessable");
    add(b);
  }
  {
    Builder b("three_cof", "T_1|>=3", "size 1 or at least 3");
    b.from_schema("exactly(1) or atleast(3)").density(exact(1)).row(3, "gentle, computable, not strongly finitely witnessable, density 1");
    add(b);
  }
  {
    Builder b("three_fin", "T_1|3", "size 1 or 3");
    b.from_schema("exactly(1) or exactly(3)")
        .density(exact(0))
        .cell(Property::CF, T, "computable spectrum")
        .cell(Property::G, T, "finite spectrum")
        .cell(Property::SW, F, "not strongly finitely witnessable")
        .note("given as the density-0 instance of the {0,1} row, but it has no infinite models, so SI fails and it falls in the last row");
    add(b);
  }
  {
    Builder b("empty", "T_empty", "contradictory axioms, no models at all");
    b.from_schema("atleast(2) and atmost(1)")
        .density(exact(0))
        .cell(Property::SI, F, "no infinite models")
        .note("SM, FMP, SW hold vacuously where the deciders allow it");
    add(b);
  }
  {
    // r = 1/3 with computable constant sequences.
    static const SeqPair third(Sequence::constant(1), Sequence::constant(3));
    Builder b("cf_third", "T_1/3", "step image with a_i/b_i = 1/3");
    b.from_schema(kStepSchema, &third)
        .density(exact(1, 3))
        .row(4, "computable minimal model function, density any computable number");
    add(b);
  }
  {
    static const SeqPair omega(Sequence::digits("57824", false), Sequence::exponential(10, 10));
    Builder b("omega", "T_Omega", "step image of the digit prefixes 5, 57, 578, ... over 10, 100, 1000, ...");
    b.from_schema(kStepSchema, &omega);
    LimitInfo li;
    li.best = Rational(57824, 100000);
    li.lower = Rational(57824, 100000);
    li.upper = Rational(57825, 100000);
    li.computable = false;
    b.density(DensityValue::limit(li, "claimed limit 0.57824..."))
        .cell(Property::CF, F, "density is not computable")
        .note("block-end ratios tend to 0.57824..., but the ratio inside each block climbs to about 0.93, so the density does not exist")
        .note("only the digits 57824 are known; later blocks exhaust the source");
    add(b);
  }
  {
    SeqPair sp(Sequence({1, 2, 3}, rule::Constant{1}), Sequence({2, 3, 5}, rule::Constant{2}));
    Builder b("g_row5", "T_G", "G construction over a=(1,2,3,1,...), b=(2,3,5,2,...) with a fixed non-computable bit source");
    b.direct(g_construction(sp, row5_bits(), false), true, "G construction")
        .density(exact(1, 2))
        .row(5, "finitely witnessable without a computable minimal model function");
    add(b);
  }
  {
    spec::OracleBacked o;
    o.label = "busy beaver values";
    o.intervals = {{1, 1}, {4, 4}, {6, 6}, {13, 13}};
    o.known_upto = 13;
    o.computable = false;
    o.shape = Shape::Neither;
    o.declared_density = Rational(0);
    o.escapes_computable_bounds = true;
    Builder b("bb", "T_BB", "sizes are the busy beaver values");
    b.direct(SpectrumClass::oracle(std::move(o)), true, "membership table of the first busy beaver values")
        .density(exact(0))
        .row(6, "not finitely witnessable, density 0")
        .note("membership past 13 is unknown and reported as an error");
    add(b);
  }
  return zoo;
}

bool density_matches(const std::string& expected, const DensityValue& d) {
  auto b = d.bounds();
  if (expected == "1") return d.is_exact() && d.value() == 1;
  if (expected == "0") return d.is_exact() && d.value() == 0;
  if (expected == "{0,1}") return d.is_exact() && (d.value() == 0 || d.value() == 1);
  if (expected == "REC cap [0,1]") {
    return d.computable() == Tri::Yes && b && b->first >= 0 && b->second <= 1;
  }
  if (expected == "[0,1]") return b && b->first >= 0 && b->second <= 1;
  return false;
}

const char* row_entry(int row) {
  static const char* keys[] = {"geq1", "inf", "three_cof", "cf_third", "g_row5",
                               "bb",   "n_inf2", "I",     "m_n"};
  return keys[row - 1];
}

}  // namespace

const std::vector<ZooEntry>& build_zoo() {
  static const std::vector<ZooEntry> zoo = make_zoo();
  return zoo;
}

const ZooEntry* find_zoo(const std::string& key) {
  for (const auto& e : build_zoo()) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

bool RowResult::ok() const {
  if (!density_match) return false;
  return std::all_of(cells.begin(), cells.end(),
                     [](const CellResult& c) { return c.anomaly || c.match(); });
}

int RowResult::anomaly_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                        [](const CellResult& c) { return c.anomaly; }));
}

bool Table1Report::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.ok(); });
}

int Table1Report::anomaly_count() const {
  int n = 0;
  for (const auto& r : rows) n += r.anomaly_count();
  return n;
}

Table1Report reproduce_table1(const std::vector<int>& only) {
  Table1Report rep;
  for (const auto& row : table1_rows()) {
    if (!only.empty() && std::find(only.begin(), only.end(), row.id) == only.end()) continue;
    const ZooEntry* e = find_zoo(row_entry(row.id));
    Classification c = classify(e->theory);
    RowResult r{row.id, e->key, {}, row.density, c.density, false, c.candidates};
    for (std::size_t i = 0; i < kProperties.size(); ++i) {
      Property p = kProperties[i];
      bool anomaly = std::find(row.anomalies.begin(), row.anomalies.end(), p) != row.anomalies.end();
      r.cells.push_back({p, row.cells[i], c.properties.value(p), anomaly});
    }
    r.density_match = density_matches(row.density, c.density);
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

std::string Table1Report::to_text() const {
  auto mark = [](Tri t) {
    return t == Tri::Yes ? "T" : t == Tri::No ? "F" : "?";
  };
  std::ostringstream out;
  out << "row  entry      SI SM FW SW FM CF G   density (table / decided)\n";
  int matched = 0;
  for (const auto& r : rows) {
    out << std::left << std::setw(5) << r.row << std::setw(11) << r.entry;
    for (const auto& c : r.cells) {
      std::string cell = mark(c.decided);
      if (c.anomaly && !c.match()) cell += "!";
      else if (!c.match()) cell += "x";
      out << std::setw(3) << cell;
    }
    out << " " << r.expected_density << " / " << r.density.to_string()
        << (r.ok() ? "  match" : "  MISMATCH") << "\n";
    if (r.ok()) ++matched;
  }
  out << matched << "/" << rows.size() << " rows match";
  const int a = anomaly_count();
  out << ", " << a << " flagged anomaly cell" << (a == 1 ? "" : "s");
  for (const auto& r : rows) {
    for (const auto& c : r.cells) {
      if (c.anomaly) {
        out << "\n  row " << r.row << " " << to_string(c.property) << ": table says "
            << mark(c.expected) << ", decided " << mark(c.decided)
            << " (every model is finite, so the finite model property holds)";
      }
    }
  }
  out << "\n";
  return out.str();
}

}  // namespace specdens
