#include "atlas/data.hpp"

#include <map>
#include <stdexcept>

namespace atlas {
namespace data {

namespace generated {
const std::map<std::string, std::string_view>& table();
}

std::string_view raw(const std::string& name) {
  const auto& t = generated::table();
  auto it = t.find(name);
  if (it == t.end())
    throw std::runtime_error("unknown embedded data table: " + name);
  return it->second;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : generated::table()) out.push_back(k);
  return out;
}

nlohmann::json parsed(const std::string& name) {
  return nlohmann::json::parse(raw(name));
}

std::vector<GoldenState> golden_states() {
  auto j = parsed("states");
  std::vector<GoldenState> out;
  for (const auto& row : j.at("states")) {
    GoldenState g;
    g.k = row.at("k").get<int>();
    auto r = row.at("r");
    for (int i = 0; i < kNumVars; ++i) g.r[i] = r.at(i).get<long>();
    g.support_size = row.at("support_size").get<int>();
    g.dim_phi = row.at("dim_phi").get<int>();
    out.push_back(g);
  }
  return out;
}

}  // namespace data
}  // namespace atlas
