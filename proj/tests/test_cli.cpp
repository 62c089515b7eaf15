#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qpol/csv.hpp"
#include "qpol/degrees.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(QPOL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(qpol::format_number(0.5) == "0.5");
  CHECK(qpol::format_number(-0.0) == "0");
  CHECK(qpol::format_number(1.0 / 3) == "0.333333333333");
  CHECK(qpol::format_number(1e-20) == "1e-20");
}

TEST_CASE("curve CSV layout") {
  std::ostringstream out;
  qpol::write_curve_csv(out, {{0.0, 0.0, "hsb"}, {0.5, 0.25, "bb"}});
  CHECK(out.str() == "nbar,measure,value\n0,hsb,0\n0.5,bb,0.25\n");
}

TEST_CASE("maxcurve command") {
  const Run r = run("maxcurve --measure bb --from 0 --to 1 --step 0.5");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("nbar,measure,value\n0,bb,0\n0.5,bb,", 0) == 0);
  CHECK(r.out.find("\n1,bb,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("verify stokes --samples 2").status == 0);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("analyze /nonexistent/state.json").status == 2);
  CHECK(run("maxcurve --measure xyz").status == 2);
  CHECK(run("unpolarized gen --manifold 3 --a0 0.7 --a2 0.7").status == 2);
  CHECK(run("unpolarized gen --manifold 2 --a 0.5 --theta 0.3").status == 0);
}

TEST_CASE("coherent output analyzes to a fully polarized state") {
  const std::string path = std::string(QPOL_TEST_TMP) + "/coherent.json";
  REQUIRE(run("--out " + path + " coherent --cutoff 3 --theta 0.4 --phi 1.0").status == 0);
  const Run r = run("analyze " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"P_S\": 1") != std::string::npos);
}
