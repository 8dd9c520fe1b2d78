#include "betti/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace betti {

IdealPresentation::IdealPresentation(int ambient_n, std::vector<Monomial> generators)
    : ambient_n_(ambient_n), generators_(std::move(generators)) {
  if (ambient_n_ < 1)
    throw DimensionError("IdealPresentation: ambient variable count must be positive");
  for (const Monomial& g : generators_)
    if (g.vars() != ambient_n_)
      throw DimensionError("IdealPresentation: generator " + to_string(g) +
                           " does not live in " + std::to_string(ambient_n_) + " variables");
}

bool IdealPresentation::contains_unit() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_one(); });
}

IdealPresentation minimal_generators(const IdealPresentation& ideal) {
  std::vector<Monomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), deg_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  for (const Monomial& candidate : gens) {
    bool redundant = false;
    for (const Monomial& other : gens) {
      if (other == candidate) continue;
      if (divides(other, candidate)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(candidate);
  }
  return IdealPresentation(ideal.vars(), std::move(kept));
}

bool is_squarefree(const IdealPresentation& ideal) {
  const auto minimal = minimal_generators(ideal);
  return std::all_of(minimal.generators().begin(), minimal.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

namespace {

// -1 if g is not a pure power x_i^a with a >= 1, else the variable index i.
int pure_power_variable(const Monomial& g) {
  int var = -1;
  for (int i = 0; i < g.vars(); ++i) {
    if (g.exponent(i) == 0) continue;
    if (var >= 0) return -1;
    var = i;
  }
  return var;
}

}  // namespace

bool is_artinian(const IdealPresentation& ideal) {
  const auto minimal = minimal_generators(ideal);
  std::vector<bool> covered(static_cast<std::size_t>(ideal.vars()), false);
  for (const Monomial& g : minimal.generators()) {
    const int var = pure_power_variable(g);
    if (var >= 0) covered[static_cast<std::size_t>(var)] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int codim(const IdealPresentation& ideal) {
  const auto minimal = minimal_generators(ideal);
  if (minimal.is_zero()) throw DomainError("codim: undefined for the zero ideal");
  if (minimal.contains_unit()) throw DomainError("codim: undefined for the unit ideal");
  const int n = ideal.vars();
  if (n > 24) throw CapacityError("codim: exhaustive subset search capped at 24 variables");

  std::vector<std::uint32_t> supports;
  supports.reserve(minimal.generator_count());
  for (const Monomial& g : minimal.generators()) {
    std::uint32_t support = 0;
    for (int i = 0; i < n; ++i)
      if (g.exponent(i) != 0) support |= (1u << i);
    supports.push_back(support);
  }

  for (int size = 1; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      const bool covers = std::all_of(supports.begin(), supports.end(),
                                      [mask](std::uint32_t s) { return (s & mask) != 0; });
      if (covers) return size;
    }
  }
  throw IntegrityError("codim: no covering variable set found");
}

IdealPresentation restrict_to_divisors(const IdealPresentation& ideal, const Monomial& l) {
  const auto minimal = minimal_generators(ideal);
  std::vector<Monomial> kept;
  for (const Monomial& g : minimal.generators())
    if (divides(g, l)) kept.push_back(g);
  return IdealPresentation(ideal.vars(), std::move(kept));
}

IdealPresentation twin_ideal(const IdealPresentation& ideal) {
  if (ideal.is_zero()) throw DomainError("twin_ideal: the generator list is empty");
  const int n = ideal.vars();
  Monomial top = Monomial::one(n);
  for (const Monomial& g : ideal.generators()) top = lcm(top, g);

  std::vector<Monomial> twins;
  twins.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if (g.exponent(i) == top.exponent(i)) e[static_cast<std::size_t>(i)] = top.exponent(i);
    twins.emplace_back(std::move(e));
  }
  return IdealPresentation(n, std::move(twins));
}

std::string to_string(const IdealPresentation& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const Monomial& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

namespace {

struct VarToken {
  bool canonical = false;  // 'x' followed by digits
  int index = 0;           // canonical: 1-based variable index
  char letter = 0;         // alias: the letter itself
  std::size_t position = 0;
};

struct FactorToken {
  VarToken var;
  std::uint64_t exponent = 1;
};

struct MonomialTokens {
  bool is_identity = false;
  std::vector<FactorToken> factors;
};

class IdealTextScanner {
 public:
  explicit IdealTextScanner(std::string_view text) : text_(text) {}

  std::vector<MonomialTokens> scan() {
    std::vector<MonomialTokens> monomials;
    while (true) {
      monomials.push_back(scan_monomial());
      skip_ws();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] != ',') throw ParseError("expected ',' between monomials", pos_);
      ++pos_;
    }
    return monomials;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t read_uint() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", pos_);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 0xffffffffull) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return value;
  }

  VarToken read_var() {
    VarToken token;
    token.position = pos_;
    const char c = text_[pos_];
    if (!std::islower(static_cast<unsigned char>(c)))
      throw ParseError("expected a variable name", pos_);
    ++pos_;
    if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t index = read_uint();
      if (index < 1 || index > 1024) throw ParseError("variable index out of range", token.position);
      token.canonical = true;
      token.index = static_cast<int>(index);
    } else {
      token.letter = c;
    }
    return token;
  }

  MonomialTokens scan_monomial() {
    MonomialTokens monomial;
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a monomial", pos_);
    if (text_[pos_] == '1') {
      ++pos_;
      monomial.is_identity = true;
      return monomial;
    }
    while (true) {
      skip_ws();
      FactorToken factor;
      factor.var = read_var();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        factor.exponent = read_uint();
      }
      monomial.factors.push_back(factor);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return monomial;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IdealPresentation parse_ideal_text(std::string_view text, int ambient_n,
                                   std::vector<char>* letters_out) {
  if (letters_out) letters_out->clear();
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view trimmed = text.substr(begin, end - begin);

  if (trimmed.empty() || trimmed == "0") {
    if (ambient_n < 1)
      throw ParseError("the zero ideal needs an explicit ambient variable count", begin);
    return IdealPresentation(ambient_n, {});
  }

  auto monomials = IdealTextScanner(trimmed).scan();

  bool saw_canonical = false, saw_alias = false;
  int max_index = 0;
  std::set<char> letters;
  for (const auto& monomial : monomials) {
    for (const auto& factor : monomial.factors) {
      if (factor.var.canonical) {
        saw_canonical = true;
        max_index = std::max(max_index, factor.var.index);
      } else {
        saw_alias = true;
        letters.insert(factor.var.letter);
      }
    }
  }
  if (saw_canonical && saw_alias)
    throw ParseError("cannot mix x<k> names with single-letter variables", begin);

  std::map<char, int> letter_index;  // alias -> 0-based variable
  int inferred_n = max_index;
  if (saw_alias) {
    int next = 0;
    for (char c : letters) letter_index[c] = next++;
    inferred_n = next;
    if (letters_out) letters_out->assign(letters.begin(), letters.end());
  }
  if (inferred_n == 0) inferred_n = 1;  // all generators are the identity

  int n = inferred_n;
  if (ambient_n > 0) {
    if (ambient_n < inferred_n)
      throw ParseError("ambient variable count " + std::to_string(ambient_n) +
                           " is smaller than the " + std::to_string(inferred_n) + " variables used",
                       begin);
    n = ambient_n;
  }

  std::vector<Monomial> gens;
  gens.reserve(monomials.size());
  for (const auto& monomial : monomials) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
    for (const auto& factor : monomial.factors) {
      const int var = factor.var.canonical ? factor.var.index - 1 : letter_index.at(factor.var.letter);
      const std::uint64_t total = exps[static_cast<std::size_t>(var)] + factor.exponent;
      if (total > 0xffffffffull) throw ParseError("exponent too large", factor.var.position);
      exps[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(total);
    }
    gens.emplace_back(std::move(exps));
  }
  return IdealPresentation(n, std::move(gens));
}

IdealPresentation ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw ParseError("ideal JSON must be {\"n\": ..., \"generators\": [...]}", 0);
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw ParseError("\"n\" must be a positive integer", 0);
  const int n = j["n"].get<int>();
  if (!j["generators"].is_array()) throw ParseError("\"generators\" must be an array", 0);

  std::vector<Monomial> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("each generator must be an exponent array of length n", 0);
    std::vector<std::uint32_t> exps;
    exps.reserve(row.size());
    for (const auto& entry : row) {
      if (!entry.is_number_integer() || entry.get<std::int64_t>() < 0 ||
          entry.get<std::int64_t>() > 0xffffffffll)
        throw ParseError("exponents must be integers in [0, 2^32)", 0);
      exps.push_back(static_cast<std::uint32_t>(entry.get<std::int64_t>()));
    }
    gens.emplace_back(std::move(exps));
  }
  return IdealPresentation(n, std::move(gens));
}

nlohmann::json ideal_to_json(const IdealPresentation& ideal) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t e : g.exponents()) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", ideal.vars()}, {"generators", std::move(rows)}};
}

}  // namespace betti
