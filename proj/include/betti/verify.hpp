#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betti/random_ideals.hpp"

namespace betti {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int count = 100;
  RandomIdealOptions ideal;   // bounds for the generated stream
  std::int64_t prime = 0;     // also cross-check GF(prime) when > 0
  int max_witnesses = 10;     // dominant-class members checked per ideal
  bool check_pivot_orders = true;
};

struct VerifyReport {
  int checked = 0;
  std::vector<std::string> failures;  // [tag] ideal: detail
  bool ok() const { return failures.empty(); }
};

/// Cross-checks every closed-form result against the strand oracle and the
/// cancellation engine on a seeded stream of random ideals. Discrepancies are
/// recorded, never repaired.
VerifyReport run_verification(const VerifyOptions& options);

/// The checks behind run_verification, applied to one ideal; failure strings
/// are appended to failures.
void verify_one_ideal(const IdealPresentation& ideal, const VerifyOptions& options,
                      std::vector<std::string>& failures);

}  // namespace betti
