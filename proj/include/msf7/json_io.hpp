#pragma once

#include "msf7/exterior.hpp"

#include <json.hpp>

#include <string>

namespace msf7 {

using Json = nlohmann::ordered_json;

Json to_json(const KForm& f);
KForm kform_from_json(const Json& j);

Json to_json(const LinearMap& g);
LinearMap linear_map_from_json(const Json& j);

Json to_json(const Matrix& m);

// Parses text, then the KForm schema; errors carry a readable message.
KForm parse_kform(const std::string& text);

}  // namespace msf7
