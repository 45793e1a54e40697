// End-to-end checks of the command-line surface: formats, exit codes and
// round-trips of the emitted JSON.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <facpol/combinat.hpp>
#include <facpol/factorial.hpp>
#include <facpol/polynomial.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

using namespace facpol;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FACPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("table csv rows") {
  auto r = run_cli("table --family stirling2 --nmax 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,0,0,0,0\n0,1,0,0,0\n0,1,1,0,0\n0,1,3,1,0\n0,1,7,6,1\n");
  auto lah = run_cli("table --family lah --nmax 3 --format csv");
  CHECK(lah.out == "1,0,0,0\n0,-1,0,0\n0,2,1,0\n0,-6,-6,-1\n");
}

TEST_CASE("table json round-trips against the in-memory values") {
  auto r = run_cli("table --family cycle --nmax 7 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "cycle");
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= 7; ++k) {
      Int v(j["values"][n][k].get<std::string>());
      CHECK(v == combinat::cycle(n, k));
    }
  auto assoc = run_cli("table --family lower-assoc --nmax 2 --kmax 2 --format json");
  auto ja = nlohmann::json::parse(assoc.out);
  CHECK(ja["values"] == nlohmann::json::parse(R"([["1","1"],["1","3"]])"));
}

TEST_CASE("poly output and json round-trip") {
  CHECK(run_cli("poly --family bell --n 4 --k 2").out == "3*X2^2 + 4*X1*X3\n");
  CHECK(run_cli("poly --family abell --n 2 --k 1").out == "-X1^-3*X2\n");
  CHECK(run_cli("poly --family potential --n 1 --k -1").out == "-X0^-2*X1\n");
  auto r = run_cli("poly --family facl --n 3 --k 2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(polynomial_from_json(j["terms"]) == fac::lower_factorial_direct(3, 2));
}

TEST_CASE("exit codes: 0 success, 1 usage, 2 verification failure") {
  CHECK(run_cli("verify --identity prop44").exit_code == 0);
  CHECK(run_cli("verify --identity bogus").exit_code == 1);
  CHECK(run_cli("poly --family bell --n 3 --k 7").exit_code == 1);
  CHECK(run_cli("poly --family nosuch --n 1 --k 1").exit_code == 1);
  CHECK(run_cli("table --family stirling2 --nmax 99").exit_code == 1);
  CHECK(run_cli("nosubcommand").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("environment cap applies") {
  auto r = run_cli("table --family stirling2 --nmax 6");
  CHECK(r.exit_code == 0);
  CliResult capped = [] {
    std::string cmd = std::string("FACPOLY_MAX_N=5 ") + FACPOLY_CLI_PATH +
                      " table --family stirling2 --nmax 6 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    return CliResult{WEXITSTATUS(pclose(pipe)), ""};
  }();
  CHECK(capped.exit_code == 1);
}

TEST_CASE("verify output is deterministic") {
  auto a = run_cli("verify --identity faa-di-bruno --seed 42 --format json");
  auto b = run_cli("verify --identity faa-di-bruno --seed 42 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
