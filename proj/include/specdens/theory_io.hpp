#pragma once

// Theory definition files (JSON). A document has `name`, `spectrum` (a
// `kind` plus the parameters of that SpectrumClass variant), an optional
// `admits_infinite`, and optional `axioms` in the schema language. When
// axioms are present they are compiled and must agree with the declared
// spectrum on [1, 256] and at infinity, or loading fails.

#include <optional>
#include <string>

#include "specdens/theory.hpp"

namespace specdens {

struct TheoryFile {
  Theory theory;
  std::optional<std::string> axioms;
};

// Pretty-printed document; round-trips through parse_theory.
std::string theory_to_json(const Theory& t, const std::optional<std::string>& axioms = {});

TheoryFile parse_theory(const std::string& text);
TheoryFile load_theory(const std::string& path);

// Throws SchemaError when the compiled axioms disagree with the theory.
void check_axioms(const Theory& t, const std::string& axioms, Nat upto = 256);

}  // namespace specdens
