#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "betti/errors.hpp"

namespace betti {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& r);

/// a^{-1} mod p; requires gcd(a, p) = 1.
std::int64_t invert_mod_p(std::int64_t a, std::int64_t p);

/// Canonical representative of r in [0, p); rejects denominators divisible
/// by p.
std::int64_t rational_mod_p(const Rational& r, std::int64_t p);

/// Rank over Q of a dense integer matrix, by one-step Bareiss fraction-free
/// elimination. Every intermediate division is checked to be exact.
long rank_fraction_free(std::vector<std::vector<Integer>> matrix);

/// Rank over Q of a rational matrix: rows are scaled integral (which leaves
/// the rank unchanged) and handed to the fraction-free elimination.
long rank_over_rationals(const std::vector<std::vector<Rational>>& matrix);

/// Rank of the matrix with entries reduced mod the odd prime p.
long rank_mod_p(const std::vector<std::vector<Rational>>& matrix, std::int64_t p);

}  // namespace betti
