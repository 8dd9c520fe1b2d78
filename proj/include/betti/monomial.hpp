#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betti/errors.hpp"

namespace betti {

/// A monomial x1^e1 * ... * xn^en over a fixed ambient variable count n,
/// stored as its exponent vector. The identity monomial 1 is the all-zeros
/// vector. Immutable after construction; safe to share across threads.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial one(int ambient_n);
  /// x_{var+1}^exponent (var is a 0-based variable index).
  static Monomial variable(int ambient_n, int var, std::uint32_t exponent = 1);

  int vars() const { return static_cast<int>(exponents_.size()); }
  std::uint32_t exponent(int var) const { return exponents_[static_cast<std::size_t>(var)]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Degree-then-lexicographic order on exponent vectors; the canonical order
/// for generator lists, table keys, and deterministic output everywhere.
bool deg_lex_less(const Monomial& a, const Monomial& b);

struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return deg_lex_less(a, b);
  }
};

/// Componentwise maximum of exponents.
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff every exponent of a is <= the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

/// True iff a_i < b_i for every index with a_i != 0. Zero exponents of a
/// impose no constraint, so 1 strongly divides everything.
bool strongly_divides(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);

/// Exact quotient a/b; requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);

/// Canonical text form: x1^6*x2^3*x3^4, with '^' omitted for exponent 1, zero
/// exponents omitted, the identity printed as "1".
std::string to_string(const Monomial& m);

/// Parses the canonical grammar (x<k> variable names only). Variable indices
/// must lie in 1..ambient_n; repeated variables accumulate.
Monomial parse_monomial(std::string_view text, int ambient_n);

}  // namespace betti
