#include "specdens/theory.hpp"

#include <algorithm>
#include <sstream>

#include "specdens/errors.hpp"

namespace specdens {

using eqlogic::Formula;

std::string to_string(Property p) {
  switch (p) {
    case Property::SI: return "SI";
    case Property::SM: return "SM";
    case Property::FW: return "FW";
    case Property::SW: return "SW";
    case Property::FMP: return "FMP";
    case Property::CF: return "CF";
    case Property::G: return "G";
  }
  return "?";
}

std::string PropertyVector::summary() const {
  std::string out;
  for (Property p : kProperties) {
    if (!out.empty()) out += ' ';
    out += to_string(p) + "=" + to_string(value(p));
  }
  return out;
}

Theory Theory::make(std::string name, SpectrumClass spectrum, bool admits_infinite) {
  if (spectrum.bounded() == Tri::No && !admits_infinite) {
    throw Error("theory '" + name +
                "' has arbitrarily large finite models, so it must admit infinite ones");
  }
  return Theory{std::move(name), std::move(spectrum), admits_infinite};
}

SpectrumClass spec_rel(const Theory& t, const Formula& f, const eqlogic::Limits& limits) {
  ExtNat m = eqlogic::min_model_size(f, limits);
  if (m.is_infinite()) return SpectrumClass::empty();
  return t.spectrum.restrict_from(m.value());
}

ExtNat minmod(const Theory& t, const Formula& f, const eqlogic::Limits& limits) {
  ExtNat m = eqlogic::min_model_size(f, limits);
  if (m.is_infinite()) return m;
  auto k = t.spectrum.next_member(m.value());
  return k ? ExtNat(*k) : ExtNat::infinite();
}

bool decide_sat(const Theory& t, const Formula& f, const eqlogic::Limits& limits) {
  ExtNat m = eqlogic::min_model_size(f, limits);
  if (m.is_infinite()) return false;
  if (t.admits_infinite) return true;
  return t.spectrum.next_member(m.value()).has_value();
}

namespace {

Verdict yes(std::string rule) { return {Tri::Yes, std::move(rule)}; }
Verdict no(std::string rule) { return {Tri::No, std::move(rule)}; }
Verdict unknown(std::string why) { return {Tri::Unknown, std::move(why)}; }

bool empty_spectrum(const SpectrumClass& s) {
  return s.bounded() == Tri::Yes && !s.next_member(1).has_value();
}

// Step-type spectra whose block layout depends on b alone.
const SeqPair* layout_seq(const SpectrumClass& s) {
  if (auto* st = std::get_if<spec::StepImage>(&s.variant())) return &st->seq;
  if (auto* g = std::get_if<spec::GStep>(&s.variant())) return &g->seq;
  return nullptr;
}

bool escapes(const SpectrumClass& s) {
  auto* o = std::get_if<spec::OracleBacked>(&s.variant());
  return o && o->escapes_computable_bounds;
}

}  // namespace

PropertyVector decide_properties(const Theory& t) {
  PropertyVector pv;
  const SpectrumClass& s = t.spectrum;
  const Tri bounded = s.bounded();

  pv[Property::SI] = t.admits_infinite
                         ? yes("si: has an infinite model")
                         : no("si: no infinite model, so finite models are bounded");

  if (!t.admits_infinite) {
    pv[Property::FMP] = yes("fmp: every model is finite");
  } else if (bounded == Tri::No) {
    pv[Property::FMP] = yes("fmp: unbounded spectrum gives every satisfiable formula a finite model");
  } else if (bounded == Tri::Yes) {
    pv[Property::FMP] = no("fmp: formulas forcing more elements than the largest finite model hold only in infinite models");
  } else {
    pv[Property::FMP] = unknown("fmp: boundedness of the spectrum is unknown");
  }

  if (!t.admits_infinite) {
    pv[Property::SM] = no("sm: finite models cannot be enlarged to infinite ones");
  } else if (empty_spectrum(s)) {
    pv[Property::SM] = yes("sm: only infinite models");
  } else if (auto m = s.upper_interval_start()) {
    pv[Property::SM] = yes("sm: spectrum is [" + std::to_string(*m) + ",inf)");
  } else if (bounded == Tri::Yes || s.shape() == Shape::Neither ||
             s.has_internal_gap() == Tri::Yes) {
    pv[Property::SM] = no("sm: spectrum is not an upper interval");
  } else {
    pv[Property::SM] = unknown("sm: cannot tell whether the spectrum is an upper interval");
  }

  switch (s.computable()) {
    case Tri::Yes: pv[Property::CF] = yes("cf: spectrum is computable"); break;
    case Tri::No: pv[Property::CF] = no("cf: spectrum is not computable"); break;
    case Tri::Unknown: pv[Property::CF] = unknown("cf: computability of the spectrum is not known"); break;
  }

  if (!t.admits_infinite && bounded == Tri::Yes) {
    pv[Property::G] = yes("g: finite spectrum without infinite models");
  } else if (t.admits_infinite && s.shape() == Shape::Cofinite &&
             pv.value(Property::CF) == Tri::Yes) {
    pv[Property::G] = yes("g: cofinite spectrum with infinite models");
  } else if (pv.value(Property::FMP) == Tri::No) {
    pv[Property::G] = no("g: finite part plus infinite models is neither finite nor cofinite");
  } else if (s.shape() == Shape::Neither) {
    pv[Property::G] = no("g: spectrum is neither finite nor cofinite");
  } else {
    pv[Property::G] = unknown("g: shape of the spectrum is unknown");
  }

  const DensityValue d = exact_density(s);
  const auto db = d.bounds();
  const SeqPair* layout = layout_seq(s);
  if (pv.value(Property::FMP) == Tri::No) {
    pv[Property::FW] = no("fw: finite witnessability implies the finite model property");
  } else if (escapes(s)) {
    pv[Property::FW] = no("fw: gaps in the spectrum outgrow every computable bound");
  } else if (pv.value(Property::CF) == Tri::Yes && pv.value(Property::FMP) == Tri::Yes) {
    pv[Property::FW] = yes("fw: computable minimal model function and finite model property");
  } else if (layout && layout->b().computable() && !layout->b().length()) {
    pv[Property::FW] = yes("fw: block starts computable from b give a covering witness");
  } else if (db && db->first > 0 && t.admits_infinite) {
    pv[Property::FW] = yes("fw: positive density");
  } else {
    pv[Property::FW] = unknown("fw: no rule decides finite witnessability here");
  }

  if (pv.value(Property::FW) == Tri::No) {
    pv[Property::SW] = no("sw: strong finite witnessability implies finite witnessability");
  } else if (pv.value(Property::SI) == Tri::Yes && pv.value(Property::SM) == Tri::No) {
    pv[Property::SW] = no("sw: stably infinite and strongly finitely witnessable implies smooth");
  } else if (pv.value(Property::G) == Tri::No) {
    pv[Property::SW] = no("sw: strong finite witnessability implies gentleness");
  } else if (s.has_internal_gap() == Tri::Yes) {
    pv[Property::SW] = no("sw: a size between two model sizes is missing, so some arrangement has no covering model (derived)");
  } else if (pv.value(Property::SM) == Tri::Yes && pv.value(Property::FMP) == Tri::Yes &&
             pv.value(Property::SI) == Tri::Yes) {
    pv[Property::SW] = yes("sw: smooth, stably infinite, finite model property");
  } else if (!t.admits_infinite && bounded == Tri::Yes &&
             s.next_member(1).value_or(1) == 1 && s.has_internal_gap() == Tri::No) {
    auto top = s.max_member();
    pv[Property::SW] = yes(top ? "sw: spectrum is [1," + std::to_string(*top) +
                                     "] and the largest size is a strong witness (generalization)"
                               : std::string("sw: no models, holds vacuously (generalization)"));
  } else {
    pv[Property::SW] = unknown("sw: no rule decides strong finite witnessability here");
  }
  return pv;
}

Nat witness_size(const Theory& t, const Formula& f) {
  const Nat n = eqlogic::free_vars(f).size();
  const SpectrumClass& s = t.spectrum;
  if (!t.admits_infinite) {
    if (s.bounded() != Tri::Yes) {
      throw PreconditionError("spectrum bound is unknown, no witness bound available");
    }
    return s.max_member().value_or(0);
  }
  if (s.bounded() != Tri::No) {
    throw PreconditionError("theory '" + t.name +
                            "' has a bounded spectrum and infinite models; it is not finitely witnessable");
  }
  if (const SeqPair* sp = layout_seq(s)) {
    // Block boundaries only depend on b: step images contain every block
    // start, G-constructions every block end.
    const bool doubled = std::holds_alternative<spec::GStep>(s.variant());
    BigInt before = 0;
    for (std::size_t i = 0;; ++i) {
      BigInt b = sp->b().at(i);
      BigInt candidate = doubled ? BigInt(2 * (before + b)) : BigInt(before + 1);
      if (candidate >= n && candidate >= s.floor()) return to_nat(candidate);
      before += b;
    }
  }
  if (std::holds_alternative<spec::OracleBacked>(s.variant())) {
    throw PreconditionError("oracle-backed spectrum gives no computable witness bound");
  }
  auto e = s.nth_element(n + 1);
  if (!e) throw PreconditionError("spectrum has fewer than " + std::to_string(n + 1) + " elements");
  return *e;
}

Formula witness(const Theory& t, const Formula& f) {
  const Nat count = witness_size(t, f);
  if (count == 0) return f;
  eqlogic::VarSet used = eqlogic::free_vars(f);
  std::vector<Formula> parts{f};
  Nat next = 1;
  for (Nat i = 0; i < count; ++i) {
    eqlogic::Var v = eqlogic::Var::intern("__w" + std::to_string(next++));
    while (used.count(v)) v = eqlogic::Var::intern("__w" + std::to_string(next++));
    parts.push_back(Formula::eq(v, v));
  }
  return Formula::conj(std::move(parts));
}

const std::vector<TableRow>& table1_rows() {
  constexpr Tri T = Tri::Yes, F = Tri::No;
  static const std::vector<TableRow> rows = {
      {1, {T, T, T, T, T, T, T}, "1", {}},
      {2, {T, T, F, F, F, T, F}, "0", {}},
      {3, {T, F, T, F, T, T, T}, "{0,1}", {}},
      {4, {T, F, T, F, T, T, F}, "REC cap [0,1]", {}},
      {5, {T, F, T, F, T, F, F}, "[0,1]", {}},
      {6, {T, F, F, F, T, F, F}, "0", {}},
      {7, {T, F, F, F, F, T, F}, "0", {}},
      {8, {F, F, T, T, F, T, T}, "0", {Property::FMP}},
      {9, {F, F, T, F, T, T, T}, "0", {}},
  };
  return rows;
}

std::vector<int> matching_rows(const PropertyVector& pv) {
  std::vector<int> out;
  for (const auto& row : table1_rows()) {
    bool ok = true;
    for (std::size_t i = 0; i < kProperties.size(); ++i) {
      Property p = kProperties[i];
      if (std::find(row.anomalies.begin(), row.anomalies.end(), p) != row.anomalies.end()) continue;
      Tri v = pv.value(p);
      if (v != Tri::Unknown && v != row.cells[i]) ok = false;
    }
    if (ok) out.push_back(row.id);
  }
  return out;
}

Classification classify(const Theory& t) {
  Classification c{decide_properties(t), exact_density(t.spectrum), std::nullopt, {}, {}};
  c.candidates = matching_rows(c.properties);
  if (c.candidates.size() == 1) c.row = c.candidates[0];
  c.check = check_theorems(c.properties, c.density);
  return c;
}

}  // namespace specdens
