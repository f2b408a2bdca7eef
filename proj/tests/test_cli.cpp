#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = "./swalk " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("gw subcommand emits the pinned golden value") {
  auto r = run("gw --shape 2,4 --lambda 2,1 --mu 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"((2,2),0)\": \"T1^2 - 2*T1*T4 + T4^2\"") != std::string::npos);
}

TEST_CASE("product with the unit class is the identity expansion") {
  auto r = run("product --shape 2,4 --lambda 0,0 --mu 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"((2,1),0)\": \"1\"") != std::string::npos);
}

TEST_CASE("zfun prints the canonical two-term polynomial") {
  auto r = run("zfun --shape 2,4 --lambda 2,2 --mu 2,1 --format text");
  CHECK(r.exit_code == 0);
  // (x1-T4)(x2-T3)(x2-T4) + (x1-T2)(x1-T4)(x2-T4), canonicalized
  CHECK(r.out.find("x1^2*x2") != std::string::npos);
  auto again = run("zfun --shape 2,4 --lambda 2,2 --mu 2,1 --format text");
  CHECK(r.out == again.out);  // byte-identical across runs
}

TEST_CASE("verify ybe suite passes") {
  auto r = run("verify --suite ybe");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\":false") == std::string::npos);
  CHECK(r.out.find("RLL") != std::string::npos);
}

TEST_CASE("bethe subcommand reports residuals and passes") {
  auto r = run("bethe --shape 2,4 --q 1 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  CHECK(r.out.find("orthogonality") != std::string::npos);
}

TEST_CASE("verify exits nonzero when a report fails") {
  auto r = run("verify --suite no-such-suite");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("usage and cap exit codes") {
  CHECK(run("gw --shape 2,4").exit_code == 2);          // missing required options
  CHECK(run("nonsense").exit_code == 2);                // unknown subcommand
  CHECK(run("gw --shape banana --lambda 1 --mu 1").exit_code == 2);
  auto r = run("table --shape 5,10");
  CHECK(r.exit_code == 3);                              // cap exceeded
}

TEST_CASE("pieri matches the quantum term") {
  auto r = run("pieri --shape 2,4 --lambda 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"((0,0),1)\": \"1\"") != std::string::npos);  // q |0,0>
  CHECK(r.out.find("\"((2,2),0)\": \"1\"") != std::string::npos);
}

TEST_CASE("kostka with alpha = (1) equals the Pieri output") {
  auto a = run("kostka --shape 2,4 --alpha 1 --mu 2,1");
  auto b = run("pieri --shape 2,4 --lambda 2,1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("table writes a well-formed JSON file") {
  auto r = run("table --shape 1,3 --out /tmp/sw_table_test.json");
  CHECK(r.exit_code == 0);
  FILE* f = fopen("/tmp/sw_table_test.json", "r");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), got);
  fclose(f);
  CHECK(content.find("\"provenance\"") != std::string::npos);
  CHECK(content.find("jacobi-trudi") != std::string::npos);
}
