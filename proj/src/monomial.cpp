#include "betti/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace betti {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b, const char* op) {
  if (a.vars() != b.vars())
    throw DimensionError(std::string(op) + ": ambient variable counts differ (" +
                         std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
}

}  // namespace

Monomial Monomial::one(int ambient_n) {
  return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(ambient_n), 0));
}

Monomial Monomial::variable(int ambient_n, int var, std::uint32_t exponent) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(ambient_n), 0);
  e.at(static_cast<std::size_t>(var)) = exponent;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t sum = 0;
  for (std::uint32_t e : exponents_) sum += e;
  return sum;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e <= 1; });
}

bool deg_lex_less(const Monomial& a, const Monomial& b) {
  const std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  const auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "lcm");
  std::vector<std::uint32_t> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i) e[static_cast<std::size_t>(i)] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "divides");
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

bool strongly_divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "strongly_divides");
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponent(i) != 0 && a.exponent(i) >= b.exponent(i)) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "operator*");
  std::vector<std::uint32_t> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i) e[static_cast<std::size_t>(i)] = a.exponent(i) + b.exponent(i);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "quotient");
  std::vector<std::uint32_t> e(static_cast<std::size_t>(a.vars()));
  for (int i = 0; i < a.vars(); ++i) {
    if (b.exponent(i) > a.exponent(i))
      throw DomainError("quotient: " + to_string(b) + " does not divide " + to_string(a));
    e[static_cast<std::size_t>(i)] = a.exponent(i) - b.exponent(i);
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, int ambient_n) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(ambient_n), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::uint64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an integer", pos);
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > 0xffffffffull) throw ParseError("integer too large", pos);
      ++pos;
    }
    return value;
  };

  skip_ws();
  if (pos >= text.size()) throw ParseError("empty monomial", pos);

  if (text[pos] == '1') {
    std::size_t after = pos + 1;
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after == text.size()) return Monomial(std::move(exps));
    // Not the bare identity; fall through and fail on the factor grammar.
  }

  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x')
      throw ParseError("expected a variable 'x<k>'", pos);
    ++pos;
    const std::size_t index_pos = pos;
    const std::uint64_t index = read_uint();
    if (index < 1 || index > static_cast<std::uint64_t>(ambient_n))
      throw ParseError("variable index out of range 1.." + std::to_string(ambient_n), index_pos);
    std::uint64_t exponent = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      exponent = read_uint();
    }
    const std::uint64_t total = exps[static_cast<std::size_t>(index - 1)] + exponent;
    if (total > 0xffffffffull) throw ParseError("exponent too large", index_pos);
    exps[static_cast<std::size_t>(index - 1)] = static_cast<std::uint32_t>(total);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' between factors", pos);
    ++pos;
  }
  return Monomial(std::move(exps));
}

}  // namespace betti
