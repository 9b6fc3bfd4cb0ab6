#pragma once

// Exhaustive (and optionally sampled) cross-validation of every formula path
// against the brute-force oracle.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/arith.hpp"

namespace nsg {

struct VerifyOptions {
  Int max_n1 = 150;
  Int sample = 0;            // extra random triples with max_n1 < n1 <= sample_max
  std::uint64_t seed = 0;
  Int sample_max = 1000;
  unsigned threads = 0;      // 0: hardware concurrency
};

struct VerifyCounts {
  Int triples = 0;
  Int coprime_minimal = 0;
  Int non_minimal = 0;
  Int non_pairwise_coprime = 0;  // minimal but sharing a factor between two generators
  Int assignments = 0;
  Int corollary_applied = 0;

  Int frobenius_mismatch = 0;
  Int relation_mismatch = 0;   // c_i from the minimization vs oracle
  Int form_mismatch = 0;       // closed formula vs relation composition
  Int corollary_mismatch = 0;
  Int lambda_violation = 0;
  Int bound_violation = 0;     // argmin alpha above I_k
  Int errors = 0;              // unexpected exceptions

  Int mismatches() const noexcept {
    return frobenius_mismatch + relation_mismatch + form_mismatch + corollary_mismatch + lambda_violation +
           bound_violation + errors;
  }
  VerifyCounts& operator+=(const VerifyCounts& o);
};

struct VerifySummary {
  VerifyCounts exhaustive;
  VerifyCounts sampled;
  std::optional<std::string> counterexample;  // first failure in enumeration order

  Int mismatches() const noexcept { return exhaustive.mismatches() + sampled.mismatches(); }
};

/// Checks one descending triple; failures are described in `failure`.
VerifyCounts verify_triple(Int n1, Int n2, Int n3, std::optional<std::string>& failure);

/// Deterministic uniform draw of `count` triples with lo <= n1 <= hi and gcd 1.
std::vector<std::array<Int, 3>> sample_triples(Int count, Int lo, Int hi, std::uint64_t seed);

VerifySummary run_verify(const VerifyOptions& opts);

std::string summary_text(const VerifyOptions& opts, const VerifySummary& s);
nlohmann::ordered_json summary_json(const VerifyOptions& opts, const VerifySummary& s);

}  // namespace nsg
