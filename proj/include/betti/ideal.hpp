#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betti/monomial.hpp"

namespace betti {

/// An ordered presentation of a monomial ideal. The generator list may be
/// empty (zero ideal), may contain duplicates and redundant generators, and
/// may contain 1 (unit ideal); twin-ideal pipelines need all three.
class IdealPresentation {
 public:
  IdealPresentation(int ambient_n, std::vector<Monomial> generators);

  int vars() const { return ambient_n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  bool is_zero() const { return generators_.empty(); }
  bool contains_unit() const;

  bool operator==(const IdealPresentation&) const = default;

 private:
  int ambient_n_;
  std::vector<Monomial> generators_;
};

/// The unique minimal generating set: deduplicated, divisibility-redundant
/// generators dropped, sorted in deg-lex order. Idempotent.
IdealPresentation minimal_generators(const IdealPresentation& ideal);

/// True iff every minimal generator has all exponents in {0, 1}.
bool is_squarefree(const IdealPresentation& ideal);

/// True iff every variable has a pure power among the minimal generators.
bool is_artinian(const IdealPresentation& ideal);

/// Minimum number of variables needed so that every minimal generator is
/// divisible by one of them; exhaustive search over subsets by size.
/// Rejects the zero and unit ideals.
int codim(const IdealPresentation& ideal);

/// The minimal generators dividing l, in canonical order.
IdealPresentation restrict_to_divisors(const IdealPresentation& ideal, const Monomial& l);

/// For each generator, keeps exactly the exponents that attain the
/// componentwise maximum over the whole list and zeroes the rest. Operates
/// on the presentation as given: order, duplicates, and list length are
/// preserved, and the output is NOT minimalized (it may contain 1).
IdealPresentation twin_ideal(const IdealPresentation& ideal);

/// Comma-separated canonical monomials; "0" for the zero ideal.
std::string to_string(const IdealPresentation& ideal);

/// Parses the comma-separated text form. Variables are either canonical
/// x1..xn names or single lowercase letters; letter input maps the distinct
/// letters, in alphabetical order, onto x1..xk. Mixing the two styles is an
/// error. ambient_n forces the ambient count when positive (it must be at
/// least the inferred count); with ambient_n = 0 the count is inferred.
/// When letters_out is non-null it receives the alias letters in variable
/// order, or stays empty for canonical and zero-ideal input.
IdealPresentation parse_ideal_text(std::string_view text, int ambient_n = 0,
                                   std::vector<char>* letters_out = nullptr);

/// {"n": 3, "generators": [[6,1,0], ...]}; bit-exact round trip with
/// ideal_to_json.
IdealPresentation ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const IdealPresentation& ideal);

}  // namespace betti
