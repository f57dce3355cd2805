#pragma once

// Empty-signature theories, represented by their spectrum and whether they
// have infinite models. With no symbols besides equality there is one model
// per cardinality up to isomorphism, so this pair is the whole model class.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specdens/density.hpp"
#include "specdens/eqlogic.hpp"
#include "specdens/properties.hpp"
#include "specdens/spectrum.hpp"

namespace specdens {

struct Theory {
  std::string name;
  SpectrumClass spectrum = SpectrumClass::empty();
  bool admits_infinite = false;

  // Rejects an unbounded spectrum without infinite models (compactness).
  static Theory make(std::string name, SpectrumClass spectrum, bool admits_infinite);
};

// Spec(T, f): sizes of T-models satisfying f, i.e. Spec(T) from M(f) on.
SpectrumClass spec_rel(const Theory& t, const eqlogic::Formula& f,
                       const eqlogic::Limits& limits = {});

// Least finite T-model size satisfying f; infinite when there is none.
ExtNat minmod(const Theory& t, const eqlogic::Formula& f,
              const eqlogic::Limits& limits = {});

bool decide_sat(const Theory& t, const eqlogic::Formula& f,
                const eqlogic::Limits& limits = {});

PropertyVector decide_properties(const Theory& t);

// Number of fresh tautologies the witness appends for f.
Nat witness_size(const Theory& t, const eqlogic::Formula& f);

// f conjoined with witness_size(t, f) fresh tautologies (= w w), named
// __w1, __w2, ... while skipping names f already uses.
eqlogic::Formula witness(const Theory& t, const eqlogic::Formula& f);

struct TableRow {
  int id;
  std::array<Tri, 7> cells;  // column order of kProperties
  std::string density;       // the row's density column, as printed
  // Cells compared as wildcards (a documented anomaly).
  std::vector<Property> anomalies;
};

const std::vector<TableRow>& table1_rows();

// Rows consistent with the vector (Unknown matches anything; anomaly cells
// are skipped).
std::vector<int> matching_rows(const PropertyVector& pv);

struct Classification {
  PropertyVector properties;
  DensityValue density;
  std::optional<int> row;  // set when exactly one row matches
  std::vector<int> candidates;
  TheoremCheck check;
};

Classification classify(const Theory& t);

}  // namespace specdens
