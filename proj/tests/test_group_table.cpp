#include <cstdio>
#include <functional>
#include <set>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "rookalg/group_io.hpp"
#include "rookalg/group_table.hpp"

using namespace rookalg;

TEST_CASE("built-in tables satisfy every invariant") {
  for (const std::string& name : FiniteGroupTable::builtinNames()) {
    const FiniteGroupTable& g = FiniteGroupTable::builtin(name);
    CHECK_NOTHROW(g.validate());
    int sq = 0;
    for (int d : g.dims) sq += d * d;
    CHECK(sq == g.order);
  }
  CHECK(FiniteGroupTable::builtin("Z2").charTable[1][1] == -1);
  CHECK(FiniteGroupTable::builtin("S3").dims == std::vector<int>{1, 1, 2});
  CHECK(FiniteGroupTable::builtin("D4").order == 8);
}

TEST_CASE("matrix models are homomorphisms with the right traces") {
  for (const std::string& name : FiniteGroupTable::builtinNames()) {
    const FiniteGroupTable& g = FiniteGroupTable::builtin(name);
    const auto& models = g.models();
    for (int psi = 0; psi < g.numChars(); ++psi) {
      for (int a = 0; a < g.order; ++a) {
        CHECK(models[psi][a].trace() == g.chi(psi, a));
        for (int b = 0; b < g.order; ++b)
          CHECK(models[psi][a] * models[psi][b] == models[psi][g.mult[a][b]]);
      }
    }
  }
}

TEST_CASE("generators close the group") {
  for (const std::string& name : FiniteGroupTable::builtinNames()) {
    const FiniteGroupTable& g = FiniteGroupTable::builtin(name);
    std::set<int> closure{0};
    for (int x : g.generators()) closure.insert(x);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(closure.begin(), closure.end());
      for (int a : cur)
        for (int b : cur)
          if (closure.insert(g.mult[a][b]).second) grew = true;
    }
    CHECK(static_cast<int>(closure.size()) == g.order);
  }
}

TEST_CASE("group files round-trip") {
  for (const std::string& name : FiniteGroupTable::builtinNames()) {
    const FiniteGroupTable& g = FiniteGroupTable::builtin(name);
    FiniteGroupTable back = parseGroupJson(groupToJson(g));
    CHECK(back.name == g.name);
    CHECK(back.mult == g.mult);
    CHECK(back.classes == g.classes);
    CHECK(back.charTable == g.charTable);
    CHECK(back.dims == g.dims);
  }
}

namespace {

std::string tamper(const std::string& text,
                   const std::function<void(nlohmann::json&)>& edit) {
  nlohmann::json j = nlohmann::json::parse(text);
  edit(j);
  return j.dump();
}

bool throwsMentioning(const std::string& text, const std::string& needle) {
  try {
    parseGroupJson(text);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("loader rejects invalid tables with located errors") {
  std::string z2 = groupToJson(FiniteGroupTable::builtin("Z2"));

  CHECK(throwsMentioning(tamper(z2, [](nlohmann::json& j) { j["mult"][1][1] = 7; }), "mult"));
  CHECK(throwsMentioning(tamper(z2, [](nlohmann::json& j) { j["mult"][1][1] = 1; }), "inv"));
  CHECK(throwsMentioning(tamper(z2, [](nlohmann::json& j) { j["inv"][1] = 0; }), "inv"));
  CHECK(throwsMentioning(
      tamper(z2, [](nlohmann::json& j) { j["char_table"][1][1] = "1"; }), "orthogonality"));
  CHECK(throwsMentioning(
      tamper(z2, [](nlohmann::json& j) { j["char_table"][0][1] = "-1"; }), "trivial"));
  CHECK(throwsMentioning(
      tamper(z2, [](nlohmann::json& j) { j["char_table"][1][0] = "1/0"; }), "char_table[1][0]"));
  CHECK(throwsMentioning(tamper(z2, [](nlohmann::json& j) { j["dims"][1] = 2; }), "dims"));
  CHECK(throwsMentioning(
      tamper(z2, [](nlohmann::json& j) { j["classes"] = {{1}, {0}}; }), "classes"));
  CHECK(throwsMentioning(tamper(z2, [](nlohmann::json& j) { j.erase("order"); }), "order"));
  CHECK(throwsMentioning("not json at all", "JSON"));

  // A class that is not closed under conjugation (S3 transpositions split).
  std::string s3 = groupToJson(FiniteGroupTable::builtin("S3"));
  CHECK(throwsMentioning(tamper(s3,
                                [](nlohmann::json& j) {
                                  j["classes"] = {{0}, {1}, {2, 3}, {4, 5}};
                                  j["char_table"] = {{"1", "1", "1", "1"},
                                                     {"1", "-1", "-1", "1"},
                                                     {"1", "1", "-1", "1"},
                                                     {"2", "0", "0", "-1"}};
                                  j["dims"] = {1, 1, 1, 2};
                                }),
                         "class"));
}

TEST_CASE("file loader reports the path") {
  std::string path = "/tmp/rookalg_bad_group.json";
  {
    std::ofstream out(path);
    out << "{\"name\": \"x\"}";
  }
  try {
    loadGroupFile(path);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(path) != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(loadGroupFile("/nonexistent/group.json"), std::invalid_argument);
}
