#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "fmzv/relation_table.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " FMZV_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("help documents the exit codes") {
  const Run r = run("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("Exit codes: 0 ok, 1 verification failure, 2") != std::string::npos);
  CHECK(r.out.find("FMZV_WORKERS") != std::string::npos);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("solve worked examples") {
  CHECK(run("solve --modulus 7 --elements 2,3 --bound 2").out == "(2,1)\n");
  CHECK(run("solve --modulus 100 --elements 2,3 --bound 3").out == "(-3,2)\n");
  const Run none = run("solve --modulus 100 --elements 2,3 --bound 2");
  CHECK(none.out == "none\n");
  CHECK(none.code == 0);
}

TEST_CASE("harmonic dumps") {
  CHECK(run("harmonic --weight 1 --primes 5").out == "index,prime,value\n(1),5,0\n");
  CHECK(run("harmonic --weight 0 --primes 7").out == "index,prime,value\n(),7,1\n");
  const Run w4 = run("harmonic --weight 4 --primes 11 --engine naive");
  CHECK(std::count(w4.out.begin(), w4.out.end(), '\n') == 9);
  for (const char* engine : {"horizontal", "vertical", "tree"}) {
    CHECK(run(std::string("harmonic --weight 4 --primes 11 --engine ") + engine).out == w4.out);
  }
  const Run json = run("harmonic --weight 2 --primes 5 --format json");
  CHECK(json.out.find("\"index\": \"(1,1)\"") != std::string::npos);
  CHECK(run("harmonic --weight 3 --primes 7,9").code == 2);
  CHECK(run("harmonic --weight 3 --primes 7,7").code == 2);
  CHECK(run("harmonic --weight 3 --primes 7 --engine quantum").code == 2);
}

TEST_CASE("harmonic output does not depend on workers") {
  const Run one = run("harmonic --weight 8 --primes 1009,1013,1019 --workers 1");
  CHECK(run("harmonic --weight 8 --primes 1009,1013,1019 --workers 3").out == one.out);
  CHECK(run("harmonic --weight 8 --primes 1009,1013,1019", "FMZV_WORKERS=4").out == one.out);
}

TEST_CASE("pipeline from a config file") {
  write("cli_w3.cfg", "weight = 3\nprimes = 101,103\nbound = 5\n");
  const Run r = run("pipeline cli_w3.cfg --output cli_w3");
  CHECK(r.code == 0);
  CHECK(r.out.find("basis (1, expected d_w = 1)") != std::string::npos);
  std::ifstream csv("cli_w3.csv");
  const fmzv::RelationTable table = fmzv::read_relation_csv(csv);
  CHECK(table.basis.size() == 1);
  CHECK(table.rows.size() == 3);
  CHECK(slurp("cli_w3.json").find("\"holds\": true") != std::string::npos);

  const Run again = run("pipeline cli_w3.cfg --output cli_w3b --workers 3 --keys-only");
  CHECK(again.code == 0);
  CHECK(slurp("cli_w3b.csv") == slurp("cli_w3.csv"));
}

TEST_CASE("pipeline output is byte-identical across runs and worker counts") {
  const std::string args = "pipeline --weight 7 --primes 1009,1013,1019,1021 --bound 20";
  const Run one = run(args + " --workers 1 --output cli_w7a");
  const Run four = run(args + " --output cli_w7b", "FMZV_WORKERS=4");
  const Run again = run(args + " --workers 1 --output cli_w7c");
  CHECK(one.code == 0);
  auto strip = [](std::string s) { return s.substr(0, s.rfind("wrote")); };
  CHECK(strip(one.out) == strip(four.out));
  CHECK(strip(one.out) == strip(again.out));
  CHECK(slurp("cli_w7a.csv") == slurp("cli_w7b.csv"));
  CHECK(slurp("cli_w7a.json") == slurp("cli_w7b.json"));
  CHECK(slurp("cli_w7a.json") == slurp("cli_w7c.json"));
}

TEST_CASE("pipeline weight 0 and flag-only configuration") {
  const Run r = run("pipeline --weight 0 --primes 5,7 --bound 3 --output cli_w0");
  CHECK(r.code == 0);
  CHECK(r.out.find("basis (1, expected d_w = 1): ()") != std::string::npos);
}

TEST_CASE("pipeline errors") {
  write("cli_bad.cfg", "weight = 3\nprimes = 101,x\nbound = 5\n");
  CHECK(run("pipeline cli_bad.cfg --output cli_bad").code == 2);
  CHECK(run("pipeline missing.cfg").code == 2);
  CHECK(run("pipeline --weight 3 --primes 101,101 --bound 5").code == 2);
  CHECK(run("pipeline --weight 3 --primes 101 --bound 200").code == 2);
  // Guard fails for tiny moduli; only fatal under --strict-guard.
  CHECK(run("pipeline --weight 3 --primes 5,7 --bound 2 --output cli_guard").code == 0);
  CHECK(run("pipeline --weight 3 --primes 5,7 --bound 2 --strict-guard --output cli_guard").code == 3);
  CHECK(run("pipeline --weight 3 --primes 10007,10009,10037 --bound 2 --strict-guard --output cli_guard").code == 0);
}

TEST_CASE("verify") {
  const Run ok = run("verify builtin-w10 --primes 10007,10009 --quiet");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("509/509") != std::string::npos);

  fmzv::RelationTable table = fmzv::builtin_weight10_table();
  table.rows[7].coefficients[1] += 1;
  {
    std::ofstream out("cli_corrupt.csv");
    fmzv::write_relation_csv(out, table);
  }
  const Run bad = run("verify cli_corrupt.csv --primes 10007,10009");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL " + table.rows[7].target.to_string()) != std::string::npos);
  CHECK(bad.out.find("508/509") != std::string::npos);

  write("cli_garbage.csv", "this is not a table\n");
  CHECK(run("verify cli_garbage.csv --primes 10007").code == 2);
  CHECK(run("verify nowhere.csv --primes 10007").code == 2);
  CHECK(run("verify builtin-w10 --primes 7").code == 2);
}
