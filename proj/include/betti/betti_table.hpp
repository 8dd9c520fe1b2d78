#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betti/monomial.hpp"

namespace betti {

/// Multigraded Betti numbers: (homological degree, multidegree) -> count,
/// with graded and total aggregations derived on demand. Zero counts are
/// never stored.
class BettiTable {
 public:
  BettiTable() = default;

  void add(int hdeg, const Monomial& mdeg, long count = 1);

  long multigraded(int hdeg, const Monomial& mdeg) const;
  /// Sum of multigraded counts of the given total degree.
  long graded(int hdeg, std::uint64_t degree) const;
  long total(int hdeg) const;

  /// Totals for homological degrees 0..pd().
  std::vector<long> totals() const;
  /// Largest homological degree with a nonzero total; 0 for an empty table.
  int pd() const;
  /// Sum of all counts.
  long sum() const;

  const std::map<int, std::map<Monomial, long, DegLex>>& entries() const {
    return entries_;
  }

  bool operator==(const BettiTable&) const = default;

  /// {"total": [...], "graded": {"i,j": c}, "multigraded": {"i": {text: c}},
  /// "pd": p}
  nlohmann::json to_json() const;

 private:
  std::map<int, std::map<Monomial, long, DegLex>> entries_;
};

}  // namespace betti
