#include "hypertoric/io.hpp"

#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace hypertoric {

using nlohmann::json;

namespace {

IntMat matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument(field + " must be a non-empty matrix");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
      throw std::invalid_argument(field + " has ragged rows");
    for (int c = 0; c < cols; ++c) {
      const json& v = j[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (!v.is_number_integer()) throw std::invalid_argument(field + " entries must be integers");
      m(i, c) = v.get<Int>();
    }
  }
  return m;
}

IntVec vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument(field + " must be an array");
  IntVec v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument(field + " entries must be integers");
    v(static_cast<int>(i)) = j[i].get<Int>();
  }
  return v;
}

}  // namespace

HypertoricData data_from_json(const json& j) {
  for (const char* field : {"E", "partial", "beta", "eta", "zeta"})
    if (!j.contains(field)) throw std::invalid_argument(std::string("missing field ") + field);
  HypertoricData d;
  for (const auto& l : j.at("E")) d.labels.push_back(l.get<std::string>());
  d.partial = matrix_from_json(j.at("partial"), "partial");
  d.beta = matrix_from_json(j.at("beta"), "beta");
  d.eta = vector_from_json(j.at("eta"), "eta");
  d.zeta = vector_from_json(j.at("zeta"), "zeta");
  const int n = d.n();
  const int k = d.k();
  if (static_cast<int>(d.labels.size()) != n || d.beta.cols() != n ||
      d.beta.rows() != n - k || d.eta.size() != k || d.zeta.size() != n - k)
    throw std::invalid_argument("hypertoric data dimensions are inconsistent");
  return d;
}

json data_to_json(const HypertoricData& data) {
  json j;
  j["E"] = data.labels;
  json partial = json::array();
  for (int i = 0; i < data.n(); ++i) {
    json row = json::array();
    for (int c = 0; c < data.k(); ++c) row.push_back(data.partial(i, c));
    partial.push_back(row);
  }
  j["partial"] = partial;
  json beta = json::array();
  for (int i = 0; i < data.a_rank(); ++i) {
    json row = json::array();
    for (int c = 0; c < data.n(); ++c) row.push_back(data.beta(i, c));
    beta.push_back(row);
  }
  j["beta"] = beta;
  j["eta"] = std::vector<Int>(data.eta.data(), data.eta.data() + data.eta.size());
  j["zeta"] = std::vector<Int>(data.zeta.data(), data.zeta.data() + data.zeta.size());
  return j;
}

HypertoricData load_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return data_from_json(j);
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace hypertoric
