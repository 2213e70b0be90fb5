#include "rookalg/group_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rookalg {

namespace {

using nlohmann::json;

json requireField(const json& j, const std::string& key) {
  if (!j.contains(key)) throw std::invalid_argument("missing field: " + key);
  return j.at(key);
}

}  // namespace

FiniteGroupTable parseGroupJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  FiniteGroupTable g;
  g.name = requireField(j, "name").get<std::string>();
  g.order = requireField(j, "order").get<int>();
  g.mult = requireField(j, "mult").get<std::vector<std::vector<int>>>();
  g.inv = requireField(j, "inv").get<std::vector<int>>();
  g.classes = requireField(j, "classes").get<std::vector<std::vector<int>>>();
  auto rows = requireField(j, "char_table").get<std::vector<std::vector<std::string>>>();
  for (size_t p = 0; p < rows.size(); ++p) {
    std::vector<Rat> row;
    for (size_t c = 0; c < rows[p].size(); ++c) {
      try {
        row.push_back(ratParse(rows[p][c]));
      } catch (const std::exception& e) {
        throw std::invalid_argument("char_table[" + std::to_string(p) + "][" +
                                    std::to_string(c) + "]: " + e.what());
      }
    }
    g.charTable.push_back(std::move(row));
  }
  g.dims = requireField(j, "dims").get<std::vector<int>>();
  g.finalize();
  g.validate();
  return g;
}

FiniteGroupTable loadGroupFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parseGroupJson(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string groupToJson(const FiniteGroupTable& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["mult"] = g.mult;
  j["inv"] = g.inv;
  j["classes"] = g.classes;
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : g.charTable) {
    std::vector<std::string> r;
    for (const Rat& v : row) r.push_back(ratStr(v));
    rows.push_back(std::move(r));
  }
  j["char_table"] = rows;
  j["dims"] = g.dims;
  return j.dump(2) + "\n";
}

void writeGroupFile(const FiniteGroupTable& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write group file: " + path);
  out << groupToJson(g);
}

}  // namespace rookalg
