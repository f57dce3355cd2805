#include "specdens/theory_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "specdens/errors.hpp"
#include "specdens/schema.hpp"

namespace specdens {

using nlohmann::json;

namespace {

BigInt big(const json& j, const std::string& what) {
  if (j.is_number_unsigned() || j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw Error(what + ": '" + s + "' is not an integer");
    }
    return BigInt(s);
  }
  throw Error(what + ": expected an integer");
}

Nat nat(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(what + ": expected a natural number");
  }
  return j.get<Nat>();
}

std::vector<Nat> nats(const json& doc, const char* key) {
  std::vector<Nat> out;
  if (!doc.contains(key)) return out;
  for (const auto& v : doc.at(key)) out.push_back(nat(v, key));
  return out;
}

json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Sequence seq_from(const json& j, const std::string& what) {
  std::vector<BigInt> prefix;
  if (j.contains("prefix")) {
    for (const auto& v : j.at("prefix")) prefix.push_back(big(v, what + ".prefix"));
  }
  std::optional<SeqRule> tail;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    const std::string rule = t.at("rule").get<std::string>();
    if (rule == "constant") {
      tail = rule::Constant{big(t.at("value"), what)};
    } else if (rule == "linear") {
      tail = rule::Linear{big(t.at("slope"), what), big(t.at("intercept"), what)};
    } else if (rule == "exponential") {
      tail = rule::Exponential{big(t.at("coef"), what), nat(t.at("base"), what)};
    } else if (rule == "digits") {
      tail = rule::DigitPrefix{t.at("digits").get<std::string>()};
    } else {
      throw Error(what + ": unknown sequence rule '" + rule + "'");
    }
  }
  return Sequence(std::move(prefix), std::move(tail), j.value("computable", true));
}

json seq_to(const Sequence& s) {
  json j = json::object();
  if (!s.prefix().empty()) {
    json p = json::array();
    for (const auto& v : s.prefix()) p.push_back(big_json(v));
    j["prefix"] = p;
  }
  if (s.tail()) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, rule::Constant>) {
            j["tail"] = {{"rule", "constant"}, {"value", big_json(r.value)}};
          } else if constexpr (std::is_same_v<T, rule::Linear>) {
            j["tail"] = {{"rule", "linear"},
                         {"slope", big_json(r.slope)},
                         {"intercept", big_json(r.intercept)}};
          } else if constexpr (std::is_same_v<T, rule::Exponential>) {
            j["tail"] = {{"rule", "exponential"}, {"coef", big_json(r.coef)}, {"base", r.base}};
          } else {
            j["tail"] = {{"rule", "digits"}, {"digits", r.digits}};
          }
        },
        *s.tail());
  }
  if (!s.computable()) j["computable"] = false;
  return j;
}

Shape shape_from(const std::string& s) {
  if (s == "finite") return Shape::Finite;
  if (s == "cofinite") return Shape::Cofinite;
  if (s == "neither") return Shape::Neither;
  if (s == "unknown") return Shape::Unknown;
  throw Error("unknown shape '" + s + "'");
}

std::string shape_to(Shape s) {
  switch (s) {
    case Shape::Finite: return "finite";
    case Shape::Cofinite: return "cofinite";
    case Shape::Neither: return "neither";
    case Shape::Unknown: return "unknown";
  }
  return "unknown";
}

SpectrumClass spectrum_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return SpectrumClass::empty();
  if (kind == "finite") return SpectrumClass::finite(nats(j, "members"));
  if (kind == "cofinite") return SpectrumClass::cofinite(nats(j, "excluded"));
  if (kind == "periodic") {
    return SpectrumClass::periodic(nat(j.at("modulus"), "modulus"), nats(j, "residues"),
                                   nats(j, "added"), nats(j, "removed"));
  }
  if (kind == "geometric") {
    return SpectrumClass::geometric(nat(j.at("base"), "base"),
                                    j.contains("min_exponent") ? nat(j.at("min_exponent"), "min_exponent") : 0,
                                    j.contains("shift") ? nat(j.at("shift"), "shift") : 0,
                                    j.value("complemented", false));
  }
  if (kind == "step" || kind == "gstep") {
    SeqPair sp(seq_from(j.at("a"), "a"), seq_from(j.at("b"), "b"));
    if (kind == "step") return SpectrumClass::step_image(std::move(sp));
    std::vector<bool> bits;
    for (char c : j.at("bits").get<std::string>()) {
      if (c != '0' && c != '1') throw Error("bits must be a string of 0 and 1");
      bits.push_back(c == '1');
    }
    return g_construction(std::move(sp), std::move(bits), j.value("bits_computable", true));
  }
  if (kind == "oracle") {
    spec::OracleBacked o;
    o.label = j.value("label", std::string("oracle"));
    for (const auto& iv : j.at("intervals")) {
      o.intervals.emplace_back(nat(iv.at(0), "interval"), nat(iv.at(1), "interval"));
    }
    o.known_upto = nat(j.at("known_upto"), "known_upto");
    o.computable = j.value("computable", false);
    o.shape = shape_from(j.value("shape", std::string("unknown")));
    if (j.contains("density")) o.declared_density = parse_rational(j.at("density").get<std::string>());
    o.escapes_computable_bounds = j.value("escapes_computable_bounds", false);
    return SpectrumClass::oracle(std::move(o));
  }
  throw Error("unknown spectrum kind '" + kind + "'");
}

json spectrum_to(const SpectrumClass& s) {
  if (s.floor() > 1) throw Error("restricted spectra have no file form");
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Finite>) {
          return {{"kind", "finite"}, {"members", v.members}};
        } else if constexpr (std::is_same_v<T, spec::Cofinite>) {
          return {{"kind", "cofinite"}, {"excluded", v.excluded}};
        } else if constexpr (std::is_same_v<T, spec::Periodic>) {
          return {{"kind", "periodic"}, {"modulus", v.modulus}, {"residues", v.residues},
                  {"added", v.added},   {"removed", v.removed}};
        } else if constexpr (std::is_same_v<T, spec::Geometric>) {
          return {{"kind", "geometric"}, {"base", v.base}, {"min_exponent", v.min_exponent},
                  {"shift", v.shift}, {"complemented", v.complemented}};
        } else if constexpr (std::is_same_v<T, spec::StepImage>) {
          return {{"kind", "step"}, {"a", seq_to(v.seq.a())}, {"b", seq_to(v.seq.b())}};
        } else if constexpr (std::is_same_v<T, spec::GStep>) {
          std::string bits;
          for (bool b : v.bits) bits += b ? '1' : '0';
          return {{"kind", "gstep"},          {"a", seq_to(v.seq.a())}, {"b", seq_to(v.seq.b())},
                  {"bits", bits}, {"bits_computable", v.bits_computable}};
        } else {
          if (v.predicate) throw Error("predicate-backed oracles have no file form");
          json iv = json::array();
          for (auto [lo, hi] : v.intervals) iv.push_back({lo, hi});
          json j = {{"kind", "oracle"},     {"label", v.label},
                    {"intervals", iv},      {"known_upto", v.known_upto},
                    {"computable", v.computable}, {"shape", shape_to(v.shape)},
                    {"escapes_computable_bounds", v.escapes_computable_bounds}};
          if (v.declared_density) j["density"] = to_string(*v.declared_density);
          return j;
        }
      },
      s.variant());
}

const SeqPair* step_seq(const SpectrumClass& s) {
  if (auto* st = std::get_if<spec::StepImage>(&s.variant())) return &st->seq;
  return nullptr;
}

}  // namespace

void check_axioms(const Theory& t, const std::string& axioms, Nat upto) {
  schema::Env env{step_seq(t.spectrum)};
  schema::Schema sch = schema::parse(axioms);
  if (schema::holds_at_infinity(sch) != t.admits_infinite) {
    throw SchemaError("axioms of '" + t.name + "' disagree with admits_infinite");
  }
  for (Nat k = 1; k <= upto; ++k) {
    if (schema::holds_at(sch, k, env) != t.spectrum.member(k)) {
      throw SchemaError("axioms of '" + t.name + "' disagree with the spectrum at " +
                        std::to_string(k));
    }
  }
}

TheoryFile parse_theory(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("theory file is not valid JSON: ") + e.what());
  }
  try {
    SpectrumClass s = spectrum_from(doc.at("spectrum"));
    bool inf;
    if (doc.contains("admits_infinite")) {
      inf = doc.at("admits_infinite").get<bool>();
    } else if (s.bounded() == Tri::No) {
      inf = true;
    } else {
      throw Error("admits_infinite is required unless the spectrum is unbounded");
    }
    TheoryFile out{Theory::make(doc.value("name", std::string("unnamed")), std::move(s), inf),
                   std::nullopt};
    if (doc.contains("axioms")) {
      out.axioms = doc.at("axioms").get<std::string>();
      check_axioms(out.theory, *out.axioms);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed theory file: ") + e.what());
  }
}

TheoryFile load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open theory file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

std::string theory_to_json(const Theory& t, const std::optional<std::string>& axioms) {
  json doc = {{"name", t.name},
              {"spectrum", spectrum_to(t.spectrum)},
              {"admits_infinite", t.admits_infinite}};
  if (axioms) doc["axioms"] = *axioms;
  return doc.dump(2) + "\n";
}

}  // namespace specdens
