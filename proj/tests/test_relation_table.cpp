#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fmzv/relation_table.hpp"
#include "fmzv/report.hpp"

using namespace fmzv;

TEST_CASE("builtin weight-10 table shape") {
  const RelationTable t = builtin_weight10_table();
  CHECK(t.basis == std::vector<Index>{{8, 1, 1}, {7, 2, 1}, {6, 3, 1}});
  REQUIRE(t.rows.size() == 509);
  std::vector<Index> expected;
  for (const Index& k : enumerate_K(10)) {
    if (std::find(t.basis.begin(), t.basis.end(), k) == t.basis.end()) expected.push_back(k);
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].target == expected[i]);
    REQUIRE(t.rows[i].coefficients.size() == 4);
    CHECK(t.rows[i].coefficients.back() > 0);
  }
  CHECK(t.rows[0].target == Index{10});
  CHECK(t.rows[0].coefficients == std::vector<std::int64_t>{0, 0, 0, 1});
  const auto row = std::find_if(t.rows.begin(), t.rows.end(),
                                [](const RelationRow& r) { return r.target == Index{6, 1, 1, 1, 1}; });
  REQUIRE(row != t.rows.end());
  CHECK(row->coefficients == std::vector<std::int64_t>{-80, 47, 2, 64});
}

TEST_CASE("bundled CSV matches the builtin table") {
  std::ifstream in(FMZV_DATA_DIR "/weight10_relations.csv");
  REQUIRE(in);
  CHECK(read_relation_csv(in) == builtin_weight10_table());
}

TEST_CASE("table round trip") {
  const RelationTable t = builtin_weight10_table();
  std::stringstream a;
  write_relation_csv(a, t);
  const RelationTable back = read_relation_csv(a);
  CHECK(back == t);
  std::stringstream b;
  write_relation_csv(b, back);
  CHECK(a.str() == b.str());
}

TEST_CASE("csv helpers") {
  CHECK(csv_field("(1)") == "(1)");
  CHECK(csv_field("(1,2)") == "\"(1,2)\"");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
  CHECK(split_csv_line("\"(1,2)\",\"(0,-3,1)\"") == std::vector<std::string>{"(1,2)", "(0,-3,1)"});
  CHECK(split_csv_line("a,\"b\"\"c\",") == std::vector<std::string>{"a", "b\"c", ""});
  CHECK(parse_coefficients("(-80, 47,2,64)") == std::vector<std::int64_t>{-80, 47, 2, 64});
  CHECK(format_coefficients({-80, 47, 2, 64}) == "(-80,47,2,64)");
  CHECK_THROWS_AS(parse_coefficients("(1,x)"), ParseError);
  CHECK_THROWS_AS(split_csv_line("\"open"), ParseError);
}

TEST_CASE("malformed tables are rejected") {
  std::istringstream no_header("\"(10)\",\"(0,0,0,1)\"\n");
  CHECK_THROWS_AS(read_relation_csv(no_header), ParseError);
  std::istringstream bad_row("# basis=(2,1)\ntarget,coefficients\n\"(3)\"\n");
  CHECK_THROWS_AS(read_relation_csv(bad_row), ParseError);
  std::istringstream bad_width("# basis=(2,1)\ntarget,coefficients\n\"(3)\",\"(0,0,1)\"\n");
  CHECK_THROWS_AS(read_relation_csv(bad_width), ParseError);
}

TEST_CASE("pipeline result to table") {
  PipelineConfig c;
  c.weight = 4;
  c.primes = {Prime(101), Prime(103)};
  c.bound = 5;
  const auto result = run_pipeline(c);
  const RelationTable t = table_from_result(result);
  CHECK(t.basis == result.basis);
  CHECK(t.rows.size() == result.relations.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t.record(i) == result.relations[i]);
}

TEST_CASE("corrupted row fails verification") {
  RelationTable t = builtin_weight10_table();
  t.rows[100].coefficients[0] += 1;
  const auto results = verify_table(t, std::vector<Prime>{Prime(10007), Prime(10009)}, 1);
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].report.holds() == (i != 100));
}

TEST_CASE("config parsing") {
  std::istringstream good(
      "# small run\nweight = 3\nprimes = 101, 103\nbound = 5\nsafety_factor = 10\nworkers = 2\nkeys_only = true\n");
  const PipelineConfig c = parse_config(good);
  CHECK(c.weight == 3);
  CHECK(c.primes == std::vector<Prime>{Prime(101), Prime(103)});
  CHECK(c.bound == 5);
  CHECK(c.safety_factor == 10);
  CHECK(c.workers == 2);
  CHECK(c.keys_only);

  std::istringstream missing("weight = 3\nbound = 5\n");
  CHECK_THROWS_AS(parse_config(missing), ConfigError);
  std::istringstream unknown("weight = 3\nprimes = 101\nbound = 5\ncolour = blue\n");
  CHECK_THROWS_AS(parse_config(unknown), ConfigError);
  std::istringstream composite("weight = 3\nprimes = 101,105\nbound = 5\n");
  CHECK_THROWS_AS(parse_config(composite), ConfigError);
  std::istringstream junk("weight = 3\nprimes = 101,,\nbound = 5\n");
  CHECK_THROWS_AS(parse_config(junk), ConfigError);
  std::istringstream small("weight = 3\nprimes = 101,7\nbound = 7\n");
  CHECK_THROWS_AS(parse_config(small), ConfigError);
}

TEST_CASE("harmonic csv") {
  const auto sums = mod_harmonic_sums(std::vector<Prime>{Prime(5)}, 1);
  std::ostringstream out;
  write_harmonic_csv(out, sums);
  CHECK(out.str() == "index,prime,value\n(1),5,0\n");
  const auto w0 = mod_harmonic_sums(std::vector<Prime>{Prime(7)}, 0);
  std::ostringstream out0;
  write_harmonic_csv(out0, w0);
  CHECK(out0.str() == "index,prime,value\n(),7,1\n");
}

TEST_CASE("pipeline json") {
  PipelineConfig c;
  c.weight = 3;
  c.primes = {Prime(101), Prime(103)};
  c.bound = 5;
  const auto result = run_pipeline(c);
  const auto guard = vanishing_guard(c, 1);
  std::vector<RowVerification> v;
  for (const auto& rec : result.relations) v.push_back({rec.target, verify_relation(rec, c.primes)});
  const auto j = pipeline_json(c, result, guard, v);
  CHECK(j["basis"].size() == 1);
  CHECK(j["expected_dimension"] == 1);
  CHECK(j["relations"].size() == 3);
  for (const auto& row : j["relations"]) CHECK(row["holds"] == true);
  CHECK(j["guard"]["pass"] == false);
}
