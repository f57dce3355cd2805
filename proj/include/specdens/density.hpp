#pragma once

// Natural densities: exact values for closed forms, sampled estimates,
// partial mediants of sequence pairs, and a checker for the implications
// between density and the combination properties.

#include <optional>
#include <string>
#include <vector>

#include "specdens/eqlogic.hpp"
#include "specdens/numeric.hpp"
#include "specdens/properties.hpp"
#include "specdens/seqpair.hpp"
#include "specdens/spectrum.hpp"

namespace specdens {

struct Theory;

struct LimitInfo {
  // Ratios |S cap [1,n]| / n at increasing n (block ends for step spectra).
  std::vector<std::pair<BigInt, Rational>> approximations;
  Rational best;
  std::optional<Rational> lower, upper;
  bool computable = true;
};

class DensityValue {
 public:
  enum class Kind { Exact, Limit, Undefined, Unknown };

  static DensityValue exact(Rational r, std::string source = {});
  static DensityValue limit(LimitInfo info, std::string note = {});
  // `along` describes a subsequence that does converge, when there is one.
  static DensityValue undefined(std::string reason, std::optional<LimitInfo> along = {});
  static DensityValue unknown(std::string reason);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  const Rational& value() const;  // Exact only
  const std::optional<LimitInfo>& limit_info() const { return limit_; }
  const std::string& note() const { return note_; }

  // Whether the density is known to be a computable real.
  Tri computable() const;
  // Sound interval containing the density, when one is known.
  std::optional<std::pair<Rational, Rational>> bounds() const;

  // "1/2 (exact)", "~0.578247 (limit ...)", "undefined (...)", "unknown (...)"
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Unknown;
  Rational exact_;
  std::optional<LimitInfo> limit_;
  std::string note_;
};

DensityValue exact_density(const SpectrumClass& s);

struct Sample {
  Nat n;
  Nat count;
  Rational ratio;
  bool block_end = false;
};

struct DensityReport {
  std::vector<Sample> samples;
  std::optional<Rational> final_ratio;
  std::optional<Rational> min_late, max_late;  // over the second half of samples
  std::string error;                           // why sampling stopped early

  std::vector<Sample> block_ends() const;
  std::string to_csv() const;
};

// Exact ratios at powers of two up to N, at N, and at every block end <= N of
// step-type spectra.
DensityReport estimate_density(const SpectrumClass& s, Nat N);

struct MediantBlock {
  BigInt a, b;
  BigInt before_a, before_b;  // A(n), B(n) of the preceding blocks
  Rational peak;              // (A(n)+a) / (B(n)+a)
  Rational end;               // (A(n)+a) / (B(n)+b)
};

// Block summaries of the partial-mediant sequence for the first k blocks.
std::vector<MediantBlock> mediant_blocks(const SeqPair& sp, std::size_t k);

// The m-th partial mediant (1-based), i.e. |image cap [1,m]| / m.
Rational mediant_at(const std::vector<MediantBlock>& blocks, const BigInt& m);

// The full interleaved sequence through k blocks: numerator and denominator
// step together up to each peak, then the denominator alone to the block end.
std::vector<Rational> mediants(const SeqPair& sp, std::size_t k,
                               std::size_t max_terms = 10'000'000);

DensityValue density_rel(const Theory& t, const eqlogic::Formula& f,
                         const eqlogic::Limits& limits = {});

struct Violation {
  std::string rule;
  std::string message;
};

struct TheoremCheck {
  std::vector<Violation> violations;
  std::vector<std::string> skipped;  // rules not evaluated, with the reason
};

// Names of the encoded implications, in checking order.
const std::vector<std::string>& theorem_rules();

TheoremCheck check_theorems(const PropertyVector& pv, const DensityValue& d);

}  // namespace specdens
