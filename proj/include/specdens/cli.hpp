#pragma once

// The specdens command line. Exit codes: 0 success, 1 user error,
// 2 internal inconsistency (theorem-checker violation, table mismatch).

#include <iosfwd>
#include <string>
#include <vector>

#include "specdens/theory_io.hpp"

namespace specdens::cli {

// "zoo:<key>" names a built-in theory; anything else is a file path.
TheoryFile resolve_theory(const std::string& ref);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specdens::cli
