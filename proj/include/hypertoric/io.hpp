#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "hypertoric/arrangement.hpp"

namespace hypertoric {

// Input document: fields "E", "partial", "beta", "eta", "zeta", all integer.
HypertoricData data_from_json(const nlohmann::json& j);
nlohmann::json data_to_json(const HypertoricData& data);
HypertoricData load_data(const std::string& path);

// FNV-1a hash of the raw input bytes, for report provenance.
std::string file_hash(const std::string& path);

}  // namespace hypertoric
