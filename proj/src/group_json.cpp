#include "carnot/group_json.hpp"

#include <fstream>

namespace carnot {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::InvalidSpec, std::string("missing field '") + key + "'", "/" + std::string(key));
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidSpec, "expected an integer", "/" + std::string(key));
  return v.get<int>();
}

}  // namespace

GroupSpec group_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidSpec, "group spec must be a JSON object", "");
  GroupSpec spec;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw Error(ErrorCode::InvalidSpec, "expected a string", "/name");
    spec.name = doc.at("name").get<std::string>();
  }
  spec.n = require_int(doc, "n");
  spec.m = require_int(doc, "m");
  const json& mats = require(doc, "B");
  if (!mats.is_array()) throw Error(ErrorCode::InvalidSpec, "expected an array of matrices", "/B");
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string loc = "/B/" + std::to_string(k);
    const json& rows = mats[k];
    if (!rows.is_array()) throw Error(ErrorCode::InvalidSpec, "expected an array of rows", loc);
    const auto nrows = static_cast<Eigen::Index>(rows.size());
    Eigen::Index ncols = nrows == 0 ? 0 : static_cast<Eigen::Index>(rows[0].is_array() ? rows[0].size() : 0);
    Matrix b(nrows, ncols);
    for (Eigen::Index i = 0; i < nrows; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      const std::string rloc = loc + "/" + std::to_string(i);
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != ncols) {
        throw Error(ErrorCode::InvalidSpec, "ragged or malformed row", rloc);
      }
      for (Eigen::Index j = 0; j < ncols; ++j) {
        const json& e = row[static_cast<std::size_t>(j)];
        if (!e.is_number()) throw Error(ErrorCode::InvalidSpec, "expected a number", rloc + "/" + std::to_string(j));
        b(i, j) = e.get<double>();
      }
    }
    spec.B.push_back(std::move(b));
  }
  return spec;
}

json group_spec_to_json(const GroupSpec& spec) {
  json mats = json::array();
  for (const Matrix& b : spec.B) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return json{{"name", spec.name}, {"n", spec.n}, {"m", spec.m}, {"B", std::move(mats)}};
}

GroupSpec load_group_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open group spec '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
  return group_spec_from_json(doc);
}

}  // namespace carnot
