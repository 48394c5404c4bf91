// Copyright 2026 The cvsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/input.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cvsep::cli {
namespace {

using nlohmann::json;

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

Mat4 read_matrix(const json& j) {
  if (!j.is_array()) throw ParseError("\"matrix\" must be an array");
  std::array<double, 16> vals{};
  if (j.size() == 16) {
    for (std::size_t k = 0; k < 16; ++k) vals[k] = number(j[k], "matrix entry");
  } else if (j.size() == 4) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!j[i].is_array() || j[i].size() != 4)
        throw ParseError("\"matrix\" rows must be arrays of 4 numbers");
      for (std::size_t c = 0; c < 4; ++c) vals[i * 4 + c] = number(j[i][c], "matrix entry");
    }
  } else {
    throw ParseError("\"matrix\" must have 4 rows of 4 or 16 entries");
  }
  return Mat4::from_rows(vals);
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");

  for (const auto& [key, _] : doc.items())
    if (key != "version" && key != "matrix" && key != "standard_form" && key != "tol")
      throw ParseError("unknown key \"" + key + "\"");

  if (doc.contains("version")) {
    const auto& ver = doc["version"];
    if (!ver.is_number_integer() || ver.get<int>() != kInputSchemaVersion)
      throw ParseError("unsupported input version (expected 1)");
  }

  const bool has_matrix = doc.contains("matrix");
  const bool has_sf = doc.contains("standard_form");
  if (has_matrix == has_sf)
    throw ParseError("exactly one of \"matrix\" and \"standard_form\" is required");

  std::optional<double> tol;
  if (doc.contains("tol")) {
    tol = number(doc["tol"], "tol");
    if (!(*tol > 0.0)) throw ParseError("tol must be positive");
  }

  std::vector<std::string> warnings;
  if (has_matrix) {
    const Mat4 m = read_matrix(doc["matrix"]);
    double asym = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
    if (asym > kSymmetryTol) {
      std::ostringstream os;
      os << "matrix is not symmetric (max asymmetry " << asym << ")";
      throw ParseError(os.str());
    }
    if (asym > 0.0) {
      std::ostringstream os;
      os << "matrix symmetrized (max asymmetry " << asym << ")";
      warnings.push_back(os.str());
    }
    return InputDocument{CovMat4(SymMat4::symmetrized(m)), false, tol, warnings};
  }

  const auto& sf = doc["standard_form"];
  if (!sf.is_object()) throw ParseError("\"standard_form\" must be an object");
  for (const char* key : {"a", "b", "c1", "c2"})
    if (!sf.contains(key)) throw ParseError(std::string("standard_form missing \"") + key + "\"");
  for (const auto& [key, _] : sf.items())
    if (key != "a" && key != "b" && key != "c1" && key != "c2")
      throw ParseError("unknown standard_form key \"" + key + "\"");
  return InputDocument{CovMat4::standard(number(sf["a"], "a"), number(sf["b"], "b"),
                                         number(sf["c1"], "c1"), number(sf["c2"], "c2")),
                       true, tol, warnings};
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

}  // namespace cvsep::cli
