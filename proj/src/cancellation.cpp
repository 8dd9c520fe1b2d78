#include "betti/cancellation.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include <nlohmann/json.hpp>

namespace betti {

namespace {

bool invertible(const Term& term) { return term.mono.is_one() && term.coeff != 0; }

using PivotEntry = std::tuple<int, std::uint32_t, std::uint32_t>;  // hdeg, source, target

std::optional<PivotEntry> find_pivot(const ChainComplex& complex, PivotOrder order) {
  const int top = complex.max_hdeg();
  auto scan = [&](int i) -> std::optional<PivotEntry> {
    const auto& d = complex.diff[static_cast<std::size_t>(i)];
    if (order == PivotOrder::TopDownReversed) {
      for (auto it = d.rbegin(); it != d.rend(); ++it)
        if (invertible(it->second)) return PivotEntry{i, it->first.first, it->first.second};
    } else {
      for (const auto& [key, term] : d)
        if (invertible(term)) return PivotEntry{i, key.first, key.second};
    }
    return std::nullopt;
  };
  if (order == PivotOrder::BottomUp) {
    for (int i = 1; i <= top; ++i)
      if (auto hit = scan(i)) return hit;
  } else {
    for (int i = top; i >= 1; --i)
      if (auto hit = scan(i)) return hit;
  }
  return std::nullopt;
}

void erase_symbol(std::vector<std::uint32_t>& basis, std::uint32_t mask) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), mask);
  if (it == basis.end() || *it != mask)
    throw IntegrityError("minimalize: cancelled symbol missing from the basis");
  basis.erase(it);
}

// Cancels the pair (delta in F_i, gamma in F_{i-1}) through their invertible
// entry and applies the pivot update to the remaining hdeg-i entries.
void cancel(ChainComplex& complex, int i, std::uint32_t delta, std::uint32_t gamma) {
  auto& d = complex.diff[static_cast<std::size_t>(i)];
  const Term pivot = d.at({delta, gamma});

  std::vector<std::pair<std::uint32_t, Term>> row;  // (pi, c[pi, delta])
  for (auto it = d.lower_bound({delta, 0}); it != d.end() && it->first.first == delta; ++it)
    if (it->first.second != gamma) row.emplace_back(it->first.second, it->second);

  std::vector<std::pair<std::uint32_t, Term>> column;  // (theta, c[gamma, theta])
  for (const auto& [key, term] : d)
    if (key.second == gamma && key.first != delta) column.emplace_back(key.first, term);

  for (const auto& [theta, through_gamma] : column) {
    for (const auto& [pi, through_delta] : row) {
      const Rational amount =
          through_delta.coeff * through_gamma.coeff / pivot.coeff;
      const Monomial mono = through_delta.mono * through_gamma.mono;
      const auto it = d.find({theta, pi});
      if (it == d.end()) {
        if (amount != 0) d.emplace(std::make_pair(theta, pi), Term{-amount, mono});
      } else {
        if (it->second.mono != mono)
          throw IntegrityError("minimalize: pivot update would mix monomials");
        it->second.coeff -= amount;
        if (it->second.coeff == 0) d.erase(it);
      }
    }
  }

  for (auto it = d.lower_bound({delta, 0}); it != d.end() && it->first.first == delta;)
    it = d.erase(it);
  for (auto it = d.begin(); it != d.end();)
    it = (it->first.second == gamma) ? d.erase(it) : std::next(it);

  if (i + 1 <= complex.max_hdeg()) {
    auto& above = complex.diff[static_cast<std::size_t>(i) + 1];
    for (auto it = above.begin(); it != above.end();)
      it = (it->first.second == delta) ? above.erase(it) : std::next(it);
  }
  if (i - 1 >= 1) {
    auto& below = complex.diff[static_cast<std::size_t>(i) - 1];
    for (auto it = below.lower_bound({gamma, 0});
         it != below.end() && it->first.first == gamma;)
      it = below.erase(it);
  }

  erase_symbol(complex.basis[static_cast<std::size_t>(i)], delta);
  erase_symbol(complex.basis[static_cast<std::size_t>(i) - 1], gamma);
  complex.mdeg.erase(delta);
  complex.mdeg.erase(gamma);
}

}  // namespace

MinimalizeResult minimalize(ChainComplex complex, PivotOrder order,
                            bool verify_each_step) {
  check_integrity(complex);
  std::vector<CancellationStep> steps;
  while (auto pivot = find_pivot(complex, order)) {
    const auto [i, delta, gamma] = *pivot;
    CancellationStep step;
    step.hdeg = i;
    step.theta_mask = delta;
    step.pi_mask = gamma;
    step.pivot_coefficient =
        complex.diff[static_cast<std::size_t>(i)].at({delta, gamma}).coeff;
    cancel(complex, i, delta, gamma);
    steps.push_back(std::move(step));
    if (verify_each_step) check_integrity(complex);
  }
  check_integrity(complex);
  return MinimalizeResult{std::move(complex), std::move(steps)};
}

BettiTable betti_from_minimal(const ChainComplex& complex) {
  for (const auto& level : complex.diff)
    for (const auto& [key, term] : level)
      if (invertible(term))
        throw DomainError("betti_from_minimal: the complex still has an invertible entry");

  BettiTable table;
  for (int i = 0; i <= complex.max_hdeg(); ++i)
    for (std::uint32_t mask : complex.basis[static_cast<std::size_t>(i)])
      table.add(i, complex.mdeg.at(mask));
  return table;
}

nlohmann::json steps_to_json(const std::vector<CancellationStep>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const CancellationStep& step : steps)
    out.push_back({{"hdeg", step.hdeg},
                   {"theta_mask", step.theta_mask},
                   {"pi_mask", step.pi_mask},
                   {"pivot_coefficient", to_string(step.pivot_coefficient)}});
  return out;
}

}  // namespace betti
