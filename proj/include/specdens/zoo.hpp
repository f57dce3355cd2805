#pragma once

// Named example theories with the classification the literature gives them,
// and the comparison of the decided table against the published one.

#include <optional>
#include <string>
#include <vector>

#include "specdens/theory.hpp"

namespace specdens {

struct ZooEntry {
  std::string key;      // "even_inf", usable as zoo:even_inf
  std::string display;  // "T_even^inf"
  std::string description;
  Theory theory;
  std::optional<std::string> axioms;
  std::string method;  // how the spectrum was obtained
  DensityValue expected_density;
  // Asserted cells only; everything else Unknown. The rule field holds the
  // note saying where the cell comes from.
  PropertyVector expected;
  std::optional<int> table_row;
  // Expected cells known to be wrong in the source, compared but not enforced.
  std::vector<Property> anomalies;
  std::vector<std::string> notes;
};

const std::vector<ZooEntry>& build_zoo();
// nullptr when absent.
const ZooEntry* find_zoo(const std::string& key);

struct CellResult {
  Property property;
  Tri expected;
  Tri decided;
  bool anomaly = false;
  bool match() const { return expected == decided; }
};

struct RowResult {
  int row;
  std::string entry;
  std::vector<CellResult> cells;
  std::string expected_density;
  DensityValue density;
  bool density_match = false;
  std::vector<int> candidates;
  // Every non-anomalous cell and the density agree.
  bool ok() const;
  int anomaly_count() const;
};

struct Table1Report {
  std::vector<RowResult> rows;
  bool all_match() const;
  int anomaly_count() const;
  std::string to_text() const;
};

// All nine rows, or only the listed ones.
Table1Report reproduce_table1(const std::vector<int>& rows = {});

}  // namespace specdens
