// Acceptance checks 1-9. One PASS/FAIL line per criterion; 7 and 9 are
// reported but never fail the run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fmzv/crt_pipeline.hpp"
#include "fmzv/dynamic_mitm.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/mitm.hpp"
#include "fmzv/oracle.hpp"
#include "fmzv/relation_table.hpp"
#include "fmzv/report.hpp"
#include "support.hpp"

using namespace fmzv;
using test_support::uniform;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const std::vector<Prime> kPaperPrimes = parse_prime_list("10007,10009,10037,10039,10061,10067,10069,10079,10091,10093,10099");

Outcome verify_builtin(const std::vector<Prime>& primes) {
  const auto results = verify_table(builtin_weight10_table(), primes, default_workers());
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.report.holds();
  std::ostringstream s;
  s << passed << "/" << results.size() << " relations vanish modulo " << primes.size() << " primes";
  return {passed == 509 && results.size() == 509, s.str()};
}

Outcome criterion_1() { return verify_builtin(kPaperPrimes); }

Outcome criterion_2() { return verify_builtin(parse_prime_list("10103,10111,10133")); }

Outcome criterion_3() {
  auto solve = [](std::uint64_t n, std::uint32_t bound) {
    const ModularGroup g{Modulus(n)};
    const std::vector<std::uint64_t> x{2, 3};
    const CoefficientArray c(bound);
    return solve_bounded_relation(g, std::span<const std::uint64_t>(x), bound,
                                  [&c](std::span<const std::uint32_t> t) { return not_all_zero(c, t); });
  };
  const auto a = solve(7, 2), b = solve(100, 3), none = solve(100, 2);
  const bool ok = a && (2 * a->coefficients[0] + 3 * a->coefficients[1]) % 7 == 0 && b &&
                  (2 * b->coefficients[0] + 3 * b->coefficients[1]) % 100 == 0 && !none;
  std::ostringstream s;
  s << "Z/7 B=2 -> " << (a ? format_coefficients(a->coefficients) : "none") << ", Z/100 B=3 -> "
    << (b ? format_coefficients(b->coefficients) : "none") << ", Z/100 B=2 -> "
    << (none ? format_coefficients(none->coefficients) : "none");
  return {ok, s.str()};
}

Outcome criterion_4() {
  std::size_t checks = 0, mismatches = 0, indices = 0;
  for (std::uint64_t pv : {5u, 7u, 11u, 13u, 101u}) {
    const Prime p(pv);
    const IndexTree tree = bounded_weight_tree(5);
    const HarmonicTable table = parallel_horizontal_dp(p, tree, default_workers());
    indices = 0;
    for (std::uint32_t w = 1; w <= 5; ++w) {
      for (const Index& k : enumerate_K(w)) {
        ++indices;
        const std::uint64_t want = oracle::harmonic_oracle(pv, k, pv - 1);
        const std::uint64_t got[] = {rdp_naive(p, k, pv - 1).value(), rdp_horizontal(p, k).back().value(),
                                     rdp_vertical(p, k).value(), table.at(k).value()};
        for (std::uint64_t v : got) {
          ++checks;
          mismatches += v != want;
        }
      }
    }
  }
  std::ostringstream s;
  s << indices << " indices x 5 primes x 4 engines: " << checks - mismatches << "/" << checks << " agree with oracle";
  return {mismatches == 0 && indices == 31, s.str()};
}

Outcome criterion_5() {
  test_support::rng().seed(5);
  int agree = 0, found = 0, bad_witness = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = test_support::log_uniform(2, 1000000);
    const std::size_t D = uniform(1, 6);
    const std::uint32_t B = static_cast<std::uint32_t>(uniform(0, 5));
    std::vector<std::uint64_t> x(D);
    for (auto& v : x) v = uniform(0, n - 1);
    const ModularGroup g{Modulus(n)};
    const CoefficientArray c(B);
    const auto mitm = solve_bounded_relation(g, std::span<const std::uint64_t>(x), B,
                                             [&c](std::span<const std::uint32_t> t) { return not_all_zero(c, t); });
    const auto brute = oracle::brute_relation({{n}}, test_support::as_oracle_elements(x), B,
                                              [](std::span<const std::int64_t> cs) {
                                                for (auto v : cs) {
                                                  if (v != 0) return true;
                                                }
                                                return false;
                                              });
    agree += mitm.has_value() == brute.has_value();
    if (mitm) {
      ++found;
      __int128 sum = 0;
      bool nonzero = false;
      for (std::size_t d = 0; d < D; ++d) {
        sum += static_cast<__int128>(mitm->coefficients[d]) * x[d];
        nonzero |= mitm->coefficients[d] != 0;
      }
      if (sum % static_cast<__int128>(n) != 0 || !nonzero) ++bad_witness;
    }
  }
  std::ostringstream s;
  s << agree << "/200 verdicts agree (" << found << " with a relation), " << bad_witness << " bad witnesses";
  return {agree == 200 && bad_witness == 0, s.str()};
}

Outcome criterion_6() {
  test_support::rng().seed(6);
  int same = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = uniform(50, 500000);
    const std::uint32_t B = static_cast<std::uint32_t>(uniform(1, 4));
    std::vector<std::uint64_t> S(uniform(0, 10));
    for (auto& v : S) v = uniform(0, n - 1);
    const ModularGroup g{Modulus(n)};
    const CoefficientArray c(B);
    auto run = [&](RebuildPolicy policy) {
      return minimal_generating_system(g, std::span<const std::uint64_t>(S), c, {policy, false, 1}).positions;
    };
    const auto a = run(RebuildPolicy::Always), b = run(RebuildPolicy::Never), d = run(RebuildPolicy::CostModel);
    same += a == b && b == d && d == run(RebuildPolicy::Balanced);
  }
  int pipelines = 0, pipelines_same = 0;
  for (std::uint32_t w = 1; w <= 6; ++w) {
    PipelineConfig config;
    config.weight = w;
    config.primes = parse_prime_list("101,103,107,109");
    config.bound = 10;
    std::vector<PipelineResult> results;
    for (KeyPolicy kp : {KeyPolicy::NoPrimes, KeyPolicy::CostModel, KeyPolicy::AllPrimes}) {
      config.key_policy = kp;
      results.push_back(run_pipeline(config));
    }
    ++pipelines;
    bool ok = true;
    for (const auto& r : results) {
      ok &= r.basis == results[0].basis && r.relations.size() == results[0].relations.size();
      for (std::size_t i = 0; ok && i < r.relations.size(); ++i) ok &= r.relations[i].target == results[0].relations[i].target;
    }
    pipelines_same += ok;
  }
  std::ostringstream s;
  s << same << "/50 generating systems identical across policies; " << pipelines_same << "/" << pipelines
    << " pipeline bases identical for key length 0, cost model, L";
  return {same == 50 && pipelines_same == pipelines, s.str()};
}

Outcome criterion_7() {
  const std::vector<std::uint32_t> weights{3, 4, 5, 6, 7};
  std::ostringstream s;
  bool ok = true;
  for (std::uint32_t w : weights) {
    PipelineConfig config;
    config.weight = w;
    config.primes = parse_prime_list("101,103,107,109");
    config.bound = 30;
    const auto result = run_pipeline(config);
    const std::uint64_t expected = dimension_recursion(w);
    s << "w=" << w << ": " << result.basis.size() << " (d_w=" << expected << ") ";
    if (result.basis.size() != expected) {
      ok = false;
      config.bound = 70;
      s << "[with B=70: " << run_pipeline(config).basis.size() << "] ";
    }
  }
  if (!ok) s << "- expected deviation: coefficient bound too small for a true relation";
  return {ok, s.str()};
}

Outcome criterion_8() {
  bool ok = enumerate_K(10).size() == 512;
  for (std::uint32_t w = 1; w <= 12; ++w) ok &= bounded_weight_tree(w).size() == (std::size_t{1} << w);
  const BigInt n = modulus_product(kPaperPrimes);
  ok &= n.str() == "106700590455862347842907841856033238416352421";
  return {ok, "#K_10 = " + std::to_string(enumerate_K(10).size()) + ", tree sizes 2^w for w=1..12, N = " + n.str()};
}

Outcome criterion_9() {
  const IndexTree tree = bounded_weight_tree(10);
  auto best_time = [&](std::uint64_t p) {
    double best = 1e300;
    for (int r = 0; r < 3; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto table = parallel_horizontal_dp(Prime(p), tree, default_workers());
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      if (table.size() != tree.size()) return -1.0;
    }
    return best;
  };
  const double a = best_time(10007), b = best_time(20011);
  const double ratio = b / a;
  std::ostringstream s;
  s << "p=10007 " << a << " s, p=20011 " << b << " s, ratio " << ratio << " (window 1.4-2.8)";
  return {ratio >= 1.4 && ratio <= 2.8, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
    bool fatal;
  };
  const Criterion criteria[] = {
      {1, "weight-10 table verifies modulo the 11 discovery primes", criterion_1, true},
      {2, "weight-10 table verifies modulo 3 fresh primes", criterion_2, true},
      {3, "worked bounded-relation examples", criterion_3, true},
      {4, "harmonic engines agree with the oracle", criterion_4, true},
      {5, "MITM agrees with brute force on 200 random instances", criterion_5, true},
      {6, "dynamic policy and key-length invariance", criterion_6, true},
      {7, "small-weight basis sizes match the dimension recursion (conjectural)", criterion_7, false},
      {8, "structural counts", criterion_8, true},
      {9, "tree DP time scales linearly in p (soft)", criterion_9, false},
  };
  int hard_failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string verdict = out.pass ? "PASS" : "FAIL";
    if (!out.pass && !c.fatal) verdict += " (non-fatal)";
    if (!out.pass && c.fatal) ++hard_failures;
    std::printf("criterion %d: %s - %s: %s [%.2fs]\n", c.number, verdict.c_str(), c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return hard_failures == 0 ? 0 : 1;
}
