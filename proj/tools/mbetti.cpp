// mbetti: monomial ideal analysis from the command line.
//
// Verbs: minimalize, dominant, top-betti, betti, pd, trivariate, twin,
// classify, verify, random. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification mismatch, 2 parse or domain error,
// 3 capacity exceeded, 4 internal invariant violation.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "betti/cancellation.hpp"
#include "betti/dominance.hpp"
#include "betti/taylor.hpp"
#include "betti/verify.hpp"
#include "betti/version.hpp"

namespace {

using namespace betti;

struct IdealArgs {
  std::optional<std::string> inline_text;
  std::string file;
  int vars = 0;
  std::string format = "text";
};

void add_ideal_options(CLI::App* sub, IdealArgs& args) {
  sub->add_option(
      "ideal", args.inline_text,
      "generators, e.g. \"x1^2*x2, x2^3\" or \"a^2*b, b^3\" (stdin when absent)");
  sub->add_option("--file", args.file, "read the ideal from this file instead");
  sub->add_option("--vars", args.vars, "ambient variable count override")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", args.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

struct LoadedIdeal {
  IdealPresentation raw;
  IdealPresentation minimal;
  std::vector<char> letters;  // alias names per variable; empty means x1..xn
};

LoadedIdeal load_ideal(const IdealArgs& args) {
  if (args.inline_text && !args.file.empty())
    throw DomainError("give the ideal either inline or with --file, not both");

  std::string text;
  if (!args.file.empty()) {
    std::ifstream input(args.file);
    if (!input) throw DomainError("cannot open " + args.file);
    std::ostringstream buffer;
    buffer << input.rdbuf();
    text = buffer.str();
  } else if (args.inline_text) {
    text = *args.inline_text;
  } else {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  }

  LoadedIdeal loaded{IdealPresentation(1, {}), IdealPresentation(1, {}), {}};
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    loaded.raw = ideal_from_json(nlohmann::json::parse(text));
    if (args.vars > 0 && args.vars != loaded.raw.vars())
      throw DomainError("--vars " + std::to_string(args.vars) +
                        " conflicts with the JSON variable count " +
                        std::to_string(loaded.raw.vars()));
  } else {
    loaded.raw = parse_ideal_text(text, args.vars, &loaded.letters);
  }
  if (static_cast<int>(loaded.letters.size()) != loaded.raw.vars())
    loaded.letters.clear();
  loaded.minimal = minimal_generators(loaded.raw);
  return loaded;
}

// Letter-aliased rendering when the input used letters; canonical otherwise.
std::string show_monomial(const Monomial& m, const std::vector<char>& letters) {
  if (static_cast<int>(letters.size()) != m.vars()) return to_string(m);
  std::string out;
  for (int v = 0; v < m.vars(); ++v) {
    const std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += letters[static_cast<std::size_t>(v)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string show_generators(const std::vector<Monomial>& gens,
                            const std::vector<char>& letters) {
  if (gens.empty()) return "0";
  std::string out;
  for (const Monomial& g : gens) {
    if (!out.empty()) out += ", ";
    out += show_monomial(g, letters);
  }
  return out;
}

std::string variable_name(int var, const std::vector<char>& letters, int vars) {
  if (static_cast<int>(letters.size()) == vars)
    return std::string(1, letters[static_cast<std::size_t>(var)]);
  return "x" + std::to_string(var + 1);
}

void print_header(const LoadedIdeal& loaded) {
  std::cout << "mbetti " << kVersion << "\n"
            << "minimal generators: "
            << show_generators(loaded.minimal.generators(), loaded.letters)
            << "\n";
}

nlohmann::json report_envelope(const LoadedIdeal& loaded) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["vars"] = loaded.minimal.vars();
  auto gens = nlohmann::json::array();
  for (const Monomial& g : loaded.minimal.generators())
    gens.push_back(to_string(g));
  j["minimal_generators"] = std::move(gens);
  return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_totals(const std::vector<long>& totals) {
  std::string out;
  for (const long b : totals) {
    if (!out.empty()) out += ", ";
    out += std::to_string(b);
  }
  return out;
}

void print_table_text(const BettiTable& table, const std::vector<char>& letters) {
  std::cout << "totals: " << join_totals(table.totals()) << "\n"
            << "pd: " << table.pd() << "\n"
            << "multigraded:\n";
  for (const auto& [hdeg, row] : table.entries())
    for (const auto& [mono, count] : row)
      std::cout << "  beta(" << hdeg << ", " << show_monomial(mono, letters)
                << ") = " << count << "\n";
}

void require_field(long long prime) {
  if (prime != 0 && prime < 2)
    throw DomainError("the coefficient field is Q (prime 0) or GF(p) for a prime p >= 2");
}

// The cancellation route to the same table the strand oracle produces.
BettiTable cancellation_table(const IdealPresentation& minimal,
                              std::vector<CancellationStep>* steps_out) {
  if (minimal.is_zero()) {
    BettiTable table;
    table.add(0, Monomial::one(minimal.vars()));
    return table;
  }
  if (minimal.contains_unit())
    throw DomainError("the unit ideal presents the zero module; its Betti table is undefined");
  MinimalizeResult result =
      minimalize(taylor_complex(minimal.vars(), minimal.generators()));
  if (steps_out) *steps_out = std::move(result.steps);
  return betti_from_minimal(result.complex);
}

int run_minimalize(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  if (args.format == "json") {
    emit(report_envelope(loaded));
  } else {
    print_header(loaded);
    std::cout << "vars: " << loaded.minimal.vars() << "\n";
  }
  return 0;
}

int run_dominant(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  const auto witnesses = enumerate_dominant_class(loaded.minimal);
  const auto& gens = loaded.minimal.generators();
  const int n = loaded.minimal.vars();

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["full_pd"] = !witnesses.empty();
    auto sets = nlohmann::json::array();
    for (const DominantWitness& w : witnesses) {
      nlohmann::json entry;
      auto members = nlohmann::json::array();
      for (const int idx : w.indices)
        members.push_back(to_string(gens[static_cast<std::size_t>(idx)]));
      entry["members"] = std::move(members);
      entry["member_indices"] = w.indices;
      entry["witness_variables"] = w.variables;
      entry["lcm"] = to_string(w.lcm_monomial);
      sets.push_back(std::move(entry));
    }
    j["dominant_sets"] = std::move(sets);
    emit(j);
    return 0;
  }

  print_header(loaded);
  std::cout << "full projective dimension: " << (witnesses.empty() ? "no" : "yes")
            << "\n"
            << "dominant sets: " << witnesses.size() << "\n";
  int label = 0;
  for (const DominantWitness& w : witnesses) {
    std::vector<Monomial> members;
    for (const int idx : w.indices)
      members.push_back(gens[static_cast<std::size_t>(idx)]);
    std::string vars_text;
    for (const int v : w.variables) {
      if (!vars_text.empty()) vars_text += ", ";
      vars_text += variable_name(v, loaded.letters, n);
    }
    std::cout << "[" << ++label << "] members: "
              << show_generators(members, loaded.letters) << "\n"
              << "    witness variables: " << vars_text << "\n"
              << "    lcm: " << show_monomial(w.lcm_monomial, loaded.letters)
              << "\n";
  }
  return 0;
}

int run_top_betti(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  const auto multidegrees = top_betti_multidegrees(loaded.minimal);
  const int n = loaded.minimal.vars();

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["hdeg"] = n;
    j["total"] = static_cast<long>(multidegrees.size());
    auto degs = nlohmann::json::array();
    for (const Monomial& l : multidegrees) degs.push_back(to_string(l));
    j["multidegrees"] = std::move(degs);
    emit(j);
    return 0;
  }

  print_header(loaded);
  std::cout << "top betti number (homological degree " << n
            << "): " << multidegrees.size() << "\n"
            << "multidegrees: "
            << (multidegrees.empty() ? "none"
                                     : show_generators(multidegrees, loaded.letters))
            << "\n";
  return 0;
}

int run_betti(const IdealArgs& args, const std::string& method, long long prime,
              bool with_steps) {
  require_field(prime);
  if (with_steps && method == "strand")
    throw DomainError("the step log needs --method cancellation or both");

  const LoadedIdeal loaded = load_ideal(args);
  std::optional<BettiTable> strand;
  std::optional<BettiTable> cancelled;
  std::vector<CancellationStep> steps;
  if (method != "cancellation")
    strand = betti_table_oracle(loaded.minimal, prime);
  if (method != "strand")
    cancelled = cancellation_table(loaded.minimal, with_steps ? &steps : nullptr);
  const BettiTable& table = strand ? *strand : *cancelled;
  const bool agree = !strand || !cancelled || *strand == *cancelled;

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["method"] = method;
    j["prime"] = prime;
    j["table"] = table.to_json();
    if (strand && cancelled) {
      j["agree"] = agree;
      if (!agree) j["cancellation_table"] = cancelled->to_json();
    }
    if (with_steps) j["steps"] = steps_to_json(steps);
    emit(j);
    return 0;
  }

  print_header(loaded);
  print_table_text(table, loaded.letters);
  if (strand && cancelled)
    std::cout << "strand and cancellation agree: " << (agree ? "yes" : "no")
              << "\n";
  if (with_steps) std::cout << "cancellation steps: " << steps.size() << "\n";
  return 0;
}

int run_pd(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  const BettiTable table = betti_table_oracle(loaded.minimal);
  const bool closed_form =
      !loaded.minimal.is_zero() && !loaded.minimal.contains_unit() &&
      pd_is_n(loaded.minimal);

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["pd"] = table.pd();
    j["full_pd"] = closed_form;
    emit(j);
    return 0;
  }

  print_header(loaded);
  std::cout << "pd: " << table.pd() << "\n"
            << "full projective dimension (closed form): "
            << (closed_form ? "yes" : "no") << "\n";
  return 0;
}

int run_trivariate(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  const std::array<long, 4> totals = trivariate_betti(loaded.minimal);

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["total"] = totals;
    emit(j);
    return 0;
  }

  print_header(loaded);
  std::cout << "totals: " << totals[0] << ", " << totals[1] << ", " << totals[2]
            << ", " << totals[3] << "\n";
  return 0;
}

int run_twin(const IdealArgs& args) {
  const LoadedIdeal loaded = load_ideal(args);
  // the twin acts on the presentation as given, duplicates and order intact
  const IdealPresentation twin = twin_ideal(loaded.raw);

  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    auto gens = nlohmann::json::array();
    for (const Monomial& g : twin.generators()) gens.push_back(to_string(g));
    j["twin_generators"] = std::move(gens);
    emit(j);
    return 0;
  }

  print_header(loaded);
  std::cout << "twin generators: "
            << show_generators(twin.generators(), loaded.letters) << "\n";
  return 0;
}

int run_classify(const IdealArgs& args, std::optional<int> k) {
  const LoadedIdeal loaded = load_ideal(args);

  if (k) {
    const UnitBettiReport report = unit_betti_report(loaded.minimal, *k);
    if (args.format == "json") {
      nlohmann::json j = report_envelope(loaded);
      j["k"] = report.k;
      j["pd"] = report.pd;
      j["codimension"] = report.codimension;
      j["codim_equals_k"] = report.codim_equals_k;
      if (report.codim_equals_k) j["betti_symmetric"] = report.betti_symmetric;
      j["pure_powers"] = report.pure_powers
                             ? nlohmann::json(*report.pure_powers)
                             : nlohmann::json(nullptr);
      j["totals"] = report.totals;
      emit(j);
      return 0;
    }
    print_header(loaded);
    std::cout << "k: " << report.k << "\n"
              << "pd: " << report.pd << "\n"
              << "codimension: " << report.codimension << "\n"
              << "codimension equals k: " << (report.codim_equals_k ? "yes" : "no")
              << "\n"
              << "betti symmetric: "
              << (report.codim_equals_k ? (report.betti_symmetric ? "yes" : "no")
                                        : "not asserted")
              << "\n";
    if (report.pure_powers) {
      std::cout << "pure power exponents:";
      for (const std::uint32_t e : *report.pure_powers) std::cout << ' ' << e;
      std::cout << "\n";
    }
    std::cout << "totals: " << join_totals(report.totals) << "\n";
    return 0;
  }

  const auto powers = classify_artinian_top_betti_one(loaded.minimal);
  const long top = top_betti_total(loaded.minimal);
  if (args.format == "json") {
    nlohmann::json j = report_envelope(loaded);
    j["artinian"] = true;
    j["top_betti"] = top;
    j["pure_powers"] =
        powers ? nlohmann::json(*powers) : nlohmann::json(nullptr);
    emit(j);
    return 0;
  }
  print_header(loaded);
  std::cout << "artinian: yes\n"
            << "top betti number: " << top << "\n"
            << "pure powers: " << (powers ? "yes" : "no") << "\n";
  if (powers) {
    std::cout << "pure power exponents:";
    for (const std::uint32_t e : *powers) std::cout << ' ' << e;
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const VerifyOptions& options, const std::string& format) {
  require_field(options.prime);
  const VerifyReport report = run_verification(options);

  if (format == "json") {
    nlohmann::json j;
    j["version"] = kVersion;
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    emit(j);
  } else {
    std::cout << "mbetti " << kVersion << "\n"
              << "checked: " << report.checked << "\n"
              << "failures: " << report.failures.size() << "\n";
    for (const std::string& failure : report.failures)
      std::cout << "  " << failure << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_random(std::uint64_t seed, int count, const RandomIdealOptions& options,
               const std::string& format) {
  std::mt19937_64 rng(seed);
  std::vector<IdealPresentation> stream;
  stream.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) stream.push_back(random_ideal(rng, options));

  if (format == "json") {
    nlohmann::json j;
    j["version"] = kVersion;
    j["seed"] = seed;
    auto ideals = nlohmann::json::array();
    for (const IdealPresentation& I : stream) ideals.push_back(ideal_to_json(I));
    j["ideals"] = std::move(ideals);
    emit(j);
  } else {
    std::cout << "mbetti " << kVersion << "\n";
    for (const IdealPresentation& I : stream) std::cout << to_string(I) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers and projective dimension of monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("mbetti ") + kVersion);

  IdealArgs args;
  std::function<int()> action;

  auto* minimalize_cmd =
      app.add_subcommand("minimalize", "print the canonical minimal generators");
  add_ideal_options(minimalize_cmd, args);
  minimalize_cmd->callback([&] { action = [&] { return run_minimalize(args); }; });

  auto* dominant_cmd = app.add_subcommand(
      "dominant", "list the size-n dominant sets certifying full projective dimension");
  add_ideal_options(dominant_cmd, args);
  dominant_cmd->callback([&] { action = [&] { return run_dominant(args); }; });

  auto* top_cmd = app.add_subcommand(
      "top-betti", "closed-form top Betti number and its multidegrees");
  add_ideal_options(top_cmd, args);
  top_cmd->callback([&] { action = [&] { return run_top_betti(args); }; });

  auto* betti_cmd =
      app.add_subcommand("betti", "full multigraded Betti table of S/M");
  add_ideal_options(betti_cmd, args);
  std::string method = "strand";
  long long betti_prime = 0;
  bool with_steps = false;
  betti_cmd->add_option("--method", method, "strand, cancellation, or both")
      ->check(CLI::IsMember({"strand", "cancellation", "both"}));
  betti_cmd->add_option("--prime", betti_prime,
                        "compute ranks over GF(p) instead of Q");
  betti_cmd->add_flag("--steps", with_steps, "report the cancellation step log");
  betti_cmd->callback([&] {
    action = [&] { return run_betti(args, method, betti_prime, with_steps); };
  });

  auto* pd_cmd = app.add_subcommand(
      "pd", "projective dimension and the full-dimension predicate");
  add_ideal_options(pd_cmd, args);
  pd_cmd->callback([&] { action = [&] { return run_pd(args); }; });

  auto* trivariate_cmd = app.add_subcommand(
      "trivariate", "closed-form Betti totals for three variables");
  add_ideal_options(trivariate_cmd, args);
  trivariate_cmd->callback([&] { action = [&] { return run_trivariate(args); }; });

  auto* twin_cmd = app.add_subcommand(
      "twin", "generator-wise twin of the presentation as given");
  add_ideal_options(twin_cmd, args);
  twin_cmd->callback([&] { action = [&] { return run_twin(args); }; });

  auto* classify_cmd = app.add_subcommand(
      "classify", "structure reports keyed to a unit Betti number");
  add_ideal_options(classify_cmd, args);
  int classify_k = 0;
  auto* k_opt = classify_cmd->add_option(
      "--k", classify_k, "report on a unit Betti number in homological degree k");
  classify_cmd->callback([&] {
    action = [&] {
      return run_classify(args, k_opt->count() > 0
                                    ? std::optional<int>(classify_k)
                                    : std::nullopt);
    };
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check closed forms, strand oracle, and cancellation");
  VerifyOptions verify_options;
  std::string verify_format = "text";
  bool skip_pivot_orders = false;
  verify_cmd->add_option("--seed", verify_options.seed, "random seed");
  verify_cmd->add_option("--count", verify_options.count, "number of ideals")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", verify_options.ideal.vars, "variable count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--q", verify_options.ideal.max_generators,
                         "generator count bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-exp", verify_options.ideal.max_exponent,
                         "exponent bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--artinian", verify_options.ideal.artinian,
                       "inject a pure power of every variable");
  verify_cmd->add_flag("--squarefree", verify_options.ideal.squarefree,
                       "draw squarefree generators");
  verify_cmd->add_option("--prime", verify_options.prime,
                         "also cross-check tables over GF(p)");
  verify_cmd->add_option("--witness-cap", verify_options.max_witnesses,
                         "dominant sets checked per ideal")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--skip-pivot-orders", skip_pivot_orders,
                       "skip the pivot-order independence check");
  verify_cmd
      ->add_option("--format", verify_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&] {
    action = [&] {
      verify_options.check_pivot_orders = !skip_pivot_orders;
      return run_verify(verify_options, verify_format);
    };
  });

  auto* random_cmd =
      app.add_subcommand("random", "emit a reproducible stream of random ideals");
  std::uint64_t random_seed = 1;
  int random_count = 10;
  RandomIdealOptions random_options;
  std::string random_format = "text";
  random_cmd->add_option("--seed", random_seed, "random seed");
  random_cmd->add_option("--count", random_count, "number of ideals")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--n", random_options.vars, "variable count")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--q", random_options.max_generators,
                         "generator count bound")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-exp", random_options.max_exponent, "exponent bound")
      ->check(CLI::PositiveNumber);
  random_cmd->add_flag("--artinian", random_options.artinian,
                       "inject a pure power of every variable");
  random_cmd->add_flag("--squarefree", random_options.squarefree,
                       "draw squarefree generators");
  random_cmd
      ->add_option("--format", random_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  random_cmd->callback([&] {
    action = [&] {
      return run_random(random_seed, random_count, random_options, random_format);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const IntegrityError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
