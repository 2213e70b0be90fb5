#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rookalg/group_io.hpp"

namespace {

std::string cliPath() {
  const char* env = std::getenv("ROOKALG_CLI");
  REQUIRE_MESSAGE(env != nullptr, "ROOKALG_CLI must point at the CLI binary");
  return env;
}

int runCli(const std::string& args) {
  std::string cmd = cliPath() + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string stripTimestamp(const std::string& text) {
  std::stringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(runCli("dim-identity --n 4") == 0);
  CHECK(runCli("eigentable --n 3") == 0);
  CHECK(runCli("charval --lambda [2,1] --rho [3]") == 0);
  CHECK(runCli("no-such-command") == 2);
  CHECK(runCli("eigentable") == 2);                       // missing --n
  CHECK(runCli("charval --lambda [2,1] --rho [4]") == 2);  // size mismatch
  CHECK(runCli("limit nothing") == 2);
}

TEST_CASE("reports are deterministic up to the timestamp") {
  std::string a = "/tmp/rookalg_report_a.json";
  std::string b = "/tmp/rookalg_report_b.json";
  for (const std::string& args :
       {std::string("dim-identity --n 4"), std::string("eigentable --n 3"),
        std::string("limit eps --i 1 --m 1 --r 3")}) {
    CHECK(runCli(args + " --out " + a) == 0);
    CHECK(runCli(args + " --out " + b) == 0);
    CHECK(stripTimestamp(slurp(a)) == stripTimestamp(slurp(b)));
    CHECK(!slurp(a).empty());
  }
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("csv flattening") {
  std::string path = "/tmp/rookalg_report.csv";
  CHECK(runCli("eigentable --n 3 --format csv --out " + path) == 0);
  std::string text = slurp(path);
  CHECK(text.find("lambda,k,zhat,psharp,match") != std::string::npos);
  CHECK(text.find("\"[2,1]\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("emitted group files load and validate") {
  using namespace rookalg;
  for (const char* name : {"trivial", "Z2", "V4", "S3", "D4"}) {
    std::string path = std::string("/tmp/rookalg_group_") + name + ".json";
    CHECK(runCli(std::string("emit-group --name ") + name + " --out " + path) == 0);
    FiniteGroupTable g = loadGroupFile(path);
    CHECK(g.name == name);
    CHECK(g.order == FiniteGroupTable::builtin(name).order);
    std::remove(path.c_str());
  }
  CHECK(runCli("emit-group --name nope") == 2);
}

TEST_CASE("limit subcommands run end to end") {
  CHECK(runCli("limit eps --i 1 --m 2 --r 3") == 0);
  CHECK(runCli("limit alpha --k 1 --r 2") == 0);
  CHECK(runCli("limit window --family alpha --k 1 --R 3") == 0);
  CHECK(runCli("limit window --family eps --i 1 --m 1 --R 4") == 0);
  CHECK(runCli("limit window --family zpsi --k 1 --psi 1 --group Z2 --R 3") == 0);
  CHECK(runCli("limit zpsi --k 1 --psi 1 --group Z2 --r 2") == 0);
  CHECK(runCli("limit alpha --k 1 --group Z2 --r 2") == 0);
  CHECK(runCli("limit eps --i 1 --m 1 --r 2 --cauchy --schedule 20,40,80,160 --tol 0.01") == 0);
  CHECK(runCli("limit eps --i 1 --m 1 --r 2 --cauchy --schedule 4,5,6 --tol 0.000001") == 1);
  CHECK(runCli("limit pipeline --k 1 --lambda [1] --schedule 12,16,20,24,28,32") == 0);
  CHECK(runCli("limit compress --family eps --i 1 --m 1 --lambda [1] --r 2 --schedule "
               "6,8,10,12") == 0);
}

TEST_CASE("wreath commands run end to end") {
  CHECK(runCli("eigentable --n 2 --group Z2") == 0);
  CHECK(runCli("verify-hecke --n 3 --group Z2") == 0);
  CHECK(runCli("verify-central --n 3 --group Z2") == 0);
  CHECK(runCli("spectrum --lambda [1] --n 4") == 0);
  CHECK(runCli("spectrum --mlambda {\\\"0\\\":[1]} --n 2 --group Z2") == 0);
  CHECK(runCli("sstar-table --size 3") == 0);
}
