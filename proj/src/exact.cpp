#include "betti/exact.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace betti {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t invert_mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DomainError("invert_mod_p: argument divisible by the modulus");
  // Extended Euclid on (a, p).
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw DomainError("invert_mod_p: argument shares a factor with the modulus");
  old_s %= p;
  if (old_s < 0) old_s += p;
  return old_s;
}

namespace {

std::int64_t integer_mod_p(const Integer& v, std::int64_t p) {
  Integer m = v % p;
  auto r = static_cast<std::int64_t>(m);
  if (r < 0) r += p;
  return r;
}

}  // namespace

std::int64_t rational_mod_p(const Rational& r, std::int64_t p) {
  const std::int64_t den = integer_mod_p(boost::multiprecision::denominator(r), p);
  if (den == 0) throw DomainError("rational_mod_p: denominator divisible by the modulus");
  const std::int64_t num = integer_mod_p(boost::multiprecision::numerator(r), p);
  return static_cast<std::int64_t>((static_cast<__int128>(num) * invert_mod_p(den, p)) % p);
}

long rank_fraction_free(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("rank_fraction_free: ragged matrix");

  long rank = 0;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        Integer q, rem;
        boost::multiprecision::divide_qr(t, prev, q, rem);
        if (rem != 0) throw IntegrityError("rank_fraction_free: inexact division");
        m[i][j] = std::move(q);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

long rank_over_rationals(const std::vector<std::vector<Rational>>& matrix) {
  std::vector<std::vector<Integer>> cleared;
  cleared.reserve(matrix.size());
  for (const auto& row : matrix) {
    Integer scale = 1;
    for (const auto& v : row)
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& v : row)
      out.push_back(boost::multiprecision::numerator(v) *
              (scale / boost::multiprecision::denominator(v)));
    cleared.push_back(std::move(out));
  }
  return rank_fraction_free(std::move(cleared));
}

long rank_mod_p(const std::vector<std::vector<Rational>>& matrix, std::int64_t p) {
  if (p < 2) throw DomainError("rank_mod_p: modulus must be a prime >= 2");
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows);
  for (const auto& row : matrix) {
    if (row.size() != cols) throw DomainError("rank_mod_p: ragged matrix");
    std::vector<std::int64_t> out;
    out.reserve(cols);
    for (const auto& v : row) out.push_back(rational_mod_p(v, p));
    m.push_back(std::move(out));
  }

  long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap(m[pivot], m[r]);
    const std::int64_t inv = invert_mod_p(m[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f =
        static_cast<std::int64_t>((static_cast<__int128>(m[i][c]) * inv) % p);
      for (std::size_t j = c; j < cols; ++j) {
        auto t = static_cast<__int128>(m[i][j]) -
             static_cast<__int128>(f) * m[r][j] % p;
        m[i][j] = static_cast<std::int64_t>(((t % p) + p) % p);
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace betti
