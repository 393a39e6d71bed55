#ifndef ATLAS_DATA_HPP
#define ATLAS_DATA_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "atlas/states.hpp"

namespace atlas {
namespace data {

// Reference tables compiled into the library (sources live under data/).
std::string_view raw(const std::string& name);
std::vector<std::string> names();
nlohmann::json parsed(const std::string& name);

std::vector<GoldenState> golden_states();

}  // namespace data
}  // namespace atlas

#endif
