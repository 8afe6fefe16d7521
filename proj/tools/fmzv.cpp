// fmzv: harmonic sums, bounded relations and relation discovery for finite
// multiple zeta values.
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration or parse error,
// 3 vanishing guard failed under --strict-guard.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fmzv/crt_pipeline.hpp"
#include "fmzv/error.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/mitm.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/relation_table.hpp"
#include "fmzv/report.hpp"

namespace {

using namespace fmzv;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kConfigError = 2;
constexpr int kGuardFailed = 3;

constexpr const char* kPaperPrimes = "10007,10009,10037,10039,10061,10067,10069,10079,10091,10093,10099";

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw ConfigError("cannot write '" + path + "'");
    stream = &file;
  }
};

int cmd_harmonic(std::uint32_t weight, const std::string& primes_text, const std::string& engine_text, int workers,
                 const std::string& output, const std::string& format) {
  const auto primes = parse_prime_list(primes_text);
  HarmonicOptions options;
  options.engine = parse_engine(engine_text);
  options.workers = workers;
  const HarmonicSums sums = mod_harmonic_sums(primes, weight, options);
  Output out(output);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const ResidueVector& v : sums.vectors()) {
      for (std::size_t l = 0; l < primes.size(); ++l) {
        rows.push_back({{"index", v.index.to_string()}, {"prime", primes[l].value()}, {"value", v.values[l]}});
      }
    }
    *out.stream << rows.dump(2) << '\n';
  } else {
    write_harmonic_csv(*out.stream, sums);
  }
  return kOk;
}

int cmd_solve(std::uint64_t modulus, const std::string& elements_text, std::uint32_t bound, int workers) {
  const ModularGroup group{Modulus(modulus)};
  std::vector<std::uint64_t> x;
  for (std::int64_t v : parse_coefficients("(" + elements_text + ")")) x.push_back(group.element(v));
  const CoefficientArray c(bound);
  SolveOptions options;
  options.workers = workers;
  const auto solution = solve_bounded_relation(
      group, std::span<const std::uint64_t>(x), bound,
      [&c](std::span<const std::uint32_t> t) { return not_all_zero(c, t); }, options);
  if (!solution) {
    std::cout << "none\n";
  } else {
    std::cout << format_coefficients(solution->coefficients) << '\n';
  }
  return kOk;
}

void print_guard(const GuardReport& g) {
  std::cout << "modulus N = " << g.modulus.str() << '\n'
            << "threshold #K_w*B^(2d+2) = " << g.threshold.str() << " (log10 N/T = " << g.log10_ratio << ")\n"
            << "compact figure #K_w*B^d = " << g.compact_threshold.str() << " (log10 N/T = " << g.log10_compact_ratio
            << ")\n"
            << "guard (safety factor " << g.safety_factor.str() << "): " << (g.pass ? "pass" : "WARNING") << '\n';
}

struct PipelineFlags {
  std::string config_path;
  std::optional<std::uint32_t> weight;
  std::string primes;
  std::optional<std::uint32_t> bound;
  std::optional<int> workers;
  bool keys_only = false;
  bool strict_guard = false;
  std::string output = "relations";
  std::string left_policy = "cost";
  std::string key_policy = "cost";
  std::optional<std::uint64_t> d_estimate;
};

int cmd_pipeline(const PipelineFlags& flags) {
  PipelineConfig config;
  bool have_weight = false, have_primes = false, have_bound = false;
  if (!flags.config_path.empty()) {
    config = load_config(flags.config_path);
    have_weight = have_primes = have_bound = true;
  } else {
    config.workers = default_workers();
  }
  if (flags.weight) {
    config.weight = *flags.weight;
    have_weight = true;
  }
  if (!flags.primes.empty()) {
    config.primes = parse_prime_list(flags.primes);
    have_primes = true;
  }
  if (flags.bound) {
    config.bound = *flags.bound;
    have_bound = true;
  }
  if (flags.workers) config.workers = *flags.workers;
  if (flags.keys_only) config.keys_only = true;
  if (!have_weight || !have_primes || !have_bound) throw ConfigError("pipeline needs weight, primes and bound");
  config.left_policy = parse_rebuild_policy(flags.left_policy);
  config.key_policy = parse_key_policy(flags.key_policy);
  validate(config);

  const std::uint64_t expected = dimension_recursion(config.weight);
  const GuardReport guard = vanishing_guard(config, flags.d_estimate.value_or(expected));
  std::cout << "weight " << config.weight << ", bound " << config.bound << ", " << config.primes.size()
            << " primes\n";
  print_guard(guard);
  if (!guard.pass && flags.strict_guard) {
    std::cerr << "vanishing guard failed; refusing to run under --strict-guard\n";
    return kGuardFailed;
  }

  HarmonicOptions options;
  options.workers = config.workers;
  const HarmonicSums sums = mod_harmonic_sums(config.primes, config.weight, options);
  const PipelineResult result = run_pipeline(config, sums);

  std::vector<RowVerification> verification;
  std::size_t failures = 0;
  for (const RelationRecord& rec : result.relations) {
    verification.push_back({rec.target, verify_relation(rec, sums)});
    if (!verification.back().report.holds()) ++failures;
  }

  std::cout << "basis (" << result.basis.size() << ", expected d_w = " << expected << "):";
  for (const Index& k : result.basis) std::cout << ' ' << k.to_string();
  std::cout << '\n'
            << "relations: " << result.relations.size() << " (" << result.stats.zero_vectors << " zero vectors), "
            << failures << " failing verification\n";

  const RelationTable table = table_from_result(result);
  {
    Output csv(flags.output + ".csv");
    write_relation_csv(*csv.stream, table);
  }
  {
    Output json(flags.output + ".json");
    *json.stream << pipeline_json(config, result, guard, verification).dump(2) << '\n';
  }
  std::cout << "wrote " << flags.output << ".csv and " << flags.output << ".json\n";
  return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& source, const std::string& primes_text, int workers, const std::string& format,
               bool quiet) {
  RelationTable table;
  if (source == "builtin-w10") {
    table = builtin_weight10_table();
  } else {
    std::ifstream in(source);
    if (!in) throw ConfigError("cannot open table '" + source + "'");
    table = read_relation_csv(in);
  }
  const auto primes = parse_prime_list(primes_text);
  const auto results = verify_table(table, primes, workers);
  std::size_t passed = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const bool ok = results[i].report.holds();
    passed += ok;
    if (format == "json") {
      rows.push_back({{"target", results[i].target.to_string()},
                      {"coefficients", table.rows[i].coefficients},
                      {"residues", results[i].report.residues},
                      {"holds", ok}});
    } else if (!quiet || !ok) {
      std::cout << (ok ? "pass " : "FAIL ") << results[i].target.to_string() << ' '
                << format_coefficients(table.rows[i].coefficients);
      if (!ok) {
        std::cout << " residues";
        for (std::uint64_t r : results[i].report.residues) std::cout << ' ' << r;
      }
      std::cout << '\n';
    }
  }
  if (format == "json") {
    nlohmann::json j = {{"passed", passed}, {"total", results.size()}, {"rows", rows}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << passed << "/" << results.size() << " relations vanish modulo all " << primes.size() << " primes\n";
  }
  return passed == results.size() ? kOk : kVerifyFailed;
}

int cmd_bench(std::uint32_t weight, const std::string& primes_text, int workers, int repeat) {
  const auto primes = parse_prime_list(primes_text);
  const IndexTree tree = bounded_weight_tree(weight);
  std::cout << "tree DP over bounded-weight tree, weight " << weight << " (" << tree.size() << " nodes), workers "
            << workers << '\n';
  std::vector<double> seconds;
  for (const Prime& p : primes) {
    double best = 1e300;
    for (int r = 0; r < std::max(1, repeat); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto table = parallel_horizontal_dp(p, tree, workers);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      best = std::min(best, s);
      if (table.size() != tree.size()) return kVerifyFailed;
    }
    seconds.push_back(best);
    std::cout << "p = " << p.value() << ": " << best << " s\n";
  }
  for (std::size_t i = 1; i < seconds.size(); ++i) {
    const double ratio = seconds[i] / seconds[0];
    const double expected = static_cast<double>(primes[i].value()) / static_cast<double>(primes[0].value());
    std::cout << "time ratio p=" << primes[i].value() << " vs p=" << primes[0].value() << ": " << ratio
              << " (prime ratio " << expected << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple zeta values: harmonic sums, bounded relations, relation discovery"};
  app.footer(
      "Exit codes: 0 ok, 1 verification failure, 2 configuration or parse error, 3 guard failure under "
      "--strict-guard.\nFMZV_WORKERS sets the default worker count.");
  app.require_subcommand(1);
  int workers = default_workers();

  auto* harmonic = app.add_subcommand("harmonic", "Dump mod-p harmonic sums of every index of a weight");
  std::uint32_t h_weight = 0;
  std::string h_primes, h_engine = "tree", h_output = "-", h_format = "csv";
  harmonic->add_option("--weight", h_weight, "Weight w")->required();
  harmonic->add_option("--primes", h_primes, "Comma-separated primes")->required();
  harmonic->add_option("--engine", h_engine, "naive, horizontal, vertical, tree or auto")
      ->check(CLI::IsMember({"naive", "horizontal", "vertical", "tree", "auto"}));
  harmonic->add_option("--workers", workers, "Worker threads");
  harmonic->add_option("--output", h_output, "Output path, '-' for stdout");
  harmonic->add_option("--format", h_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* solve = app.add_subcommand("solve", "Bounded additive relation in Z/NZ");
  std::uint64_t s_modulus = 0;
  std::string s_elements;
  std::uint32_t s_bound = 0;
  solve->add_option("--modulus", s_modulus, "N")->required();
  solve->add_option("--elements", s_elements, "Comma-separated elements of Z/NZ")->required();
  solve->add_option("--bound", s_bound, "Coefficient bound B")->required();
  solve->add_option("--workers", workers, "Worker threads");

  auto* pipeline = app.add_subcommand("pipeline", "Discover relations among weight-w values");
  PipelineFlags p_flags;
  pipeline->add_option("config", p_flags.config_path, "Config file (key = value)");
  pipeline->add_option("--weight", p_flags.weight, "Weight w");
  pipeline->add_option("--primes", p_flags.primes, "Comma-separated primes");
  pipeline->add_option("--bound", p_flags.bound, "Coefficient bound B");
  pipeline->add_option("--workers", p_flags.workers, "Worker threads");
  pipeline->add_flag("--keys-only", p_flags.keys_only, "Keep only dictionary keys");
  pipeline->add_flag("--strict-guard", p_flags.strict_guard, "Exit 3 if the vanishing guard fails");
  pipeline->add_option("--output", p_flags.output, "Output prefix for .csv and .json");
  pipeline->add_option("--left-policy", p_flags.left_policy, "Dictionary growth: cost, balanced, always or never")
      ->check(CLI::IsMember({"cost", "balanced", "always", "never"}));
  pipeline->add_option("--key-policy", p_flags.key_policy, "Key primes: cost, all or none")
      ->check(CLI::IsMember({"cost", "all", "none"}));
  pipeline->add_option("--dimension", p_flags.d_estimate, "Dimension estimate for the guard");

  auto* verify = app.add_subcommand("verify", "Check a relation table modulo primes");
  std::string v_source, v_primes = kPaperPrimes, v_format = "csv";
  bool v_quiet = false;
  verify->add_option("table", v_source, "Table CSV path or builtin-w10")->required();
  verify->add_option("--primes", v_primes, "Comma-separated primes");
  verify->add_option("--workers", workers, "Worker threads");
  verify->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_flag("--quiet", v_quiet, "Print failing rows and the summary only");

  auto* bench = app.add_subcommand("bench", "Time the tree DP for several primes");
  std::uint32_t b_weight = 10;
  std::string b_primes = "10007,20011";
  int b_repeat = 3;
  bench->add_option("--weight", b_weight, "Weight of the bounded-weight tree");
  bench->add_option("--primes", b_primes, "Comma-separated primes");
  bench->add_option("--workers", workers, "Worker threads");
  bench->add_option("--repeat", b_repeat, "Repetitions per prime (best is reported)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*harmonic) return cmd_harmonic(h_weight, h_primes, h_engine, workers, h_output, h_format);
    if (*solve) return cmd_solve(s_modulus, s_elements, s_bound, workers);
    if (*pipeline) return cmd_pipeline(p_flags);
    if (*verify) return cmd_verify(v_source, v_primes, workers, v_format, v_quiet);
    if (*bench) return cmd_bench(b_weight, b_primes, workers, b_repeat);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DuplicatePrime& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NotPrime& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
