#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betti/taylor.hpp"

namespace betti {

/// One consecutive cancellation: the hdeg-i symbol theta and the hdeg-(i-1)
/// symbol pi were removed through an invertible entry between them.
struct CancellationStep {
  int hdeg = 0;
  std::uint32_t theta_mask = 0;
  std::uint32_t pi_mask = 0;
  Rational pivot_coefficient;
};

/// Pivot scan orders. TopDown is the canonical order: homological degrees
/// from highest to lowest, then sources by ascending mask, then targets by
/// ascending mask. The others exist to test that the resulting ranks do not
/// depend on the order.
enum class PivotOrder { TopDown, BottomUp, TopDownReversed };

struct MinimalizeResult {
  ChainComplex complex;
  std::vector<CancellationStep> steps;
};

/// Repeatedly cancels invertible entries (coefficient nonzero, monomial part
/// 1) until none remain: the surviving ranks are the Betti numbers. Entries
/// of the same homological degree as the cancelled pair are updated by the
/// pivot rule c[pi,theta] -= c[pi,delta] * c[gamma,theta] / c[gamma,delta];
/// adjacent differentials only lose the cancelled row and column. Integrity
/// is verified on entry and exit, and after every step when verify_each_step
/// is set.
MinimalizeResult minimalize(ChainComplex complex,
                            PivotOrder order = PivotOrder::TopDown,
                            bool verify_each_step = false);

/// Counts basis symbols by (hdeg, mdeg). Rejects complexes that still carry
/// an invertible entry.
BettiTable betti_from_minimal(const ChainComplex& complex);

/// [{"hdeg": i, "theta_mask": t, "pi_mask": p, "pivot_coefficient": "c"}].
nlohmann::json steps_to_json(const std::vector<CancellationStep>& steps);

}  // namespace betti
