// Copyright 2026 The anyonint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyonint/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anyonint {

namespace {

using nlohmann::ordered_json;

std::string at_path(const std::string& path) { return path + ": "; }

const ordered_json& require(const ordered_json& obj, const char* key,
                            const std::string& path) {
  if (!obj.is_object())
    throw ParseError(at_path(path) + "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(at_path(path) + "missing mandatory field '" + key + "'");
  return *it;
}

std::string get_string(const ordered_json& obj, const char* key,
                       const std::string& path) {
  const ordered_json& v = require(obj, key, path);
  if (!v.is_string())
    throw ParseError(at_path(path + "." + key) + "expected a string");
  return v.get<std::string>();
}

double get_number(const ordered_json& obj, const char* key,
                  const std::string& path) {
  const ordered_json& v = require(obj, key, path);
  if (!v.is_number())
    throw ParseError(at_path(path + "." + key) + "expected a number");
  return v.get<double>();
}

int get_int(const ordered_json& obj, const char* key, const std::string& path) {
  const ordered_json& v = require(obj, key, path);
  if (!v.is_number_integer())
    throw ParseError(at_path(path + "." + key) + "expected an integer");
  return v.get<int>();
}

Complex get_complex_fields(const ordered_json& obj, const std::string& path) {
  return {get_number(obj, "re", path), get_number(obj, "im", path)};
}

Complex parse_complex_pair(const ordered_json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(at_path(path) + "expected a [re, im] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

ModelPtr load_model(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("model file is not valid JSON: ") + err.what());
  }
  if (!doc.is_object())
    throw ParseError("model file must be a JSON object");

  ModelData data;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string())
    data.name = it->get<std::string>();

  const ordered_json& charges = require(doc, "charges", "model");
  if (!charges.is_array() || charges.empty())
    throw ParseError("charges: expected a non-empty list");
  for (size_t i = 0; i < charges.size(); ++i) {
    const std::string path = "charges[" + std::to_string(i) + "]";
    data.charges.push_back({get_string(charges[i], "name", path),
                            get_string(charges[i], "dual", path),
                            get_number(charges[i], "qdim", path)});
  }

  const ordered_json& fusion = require(doc, "fusion", "model");
  if (!fusion.is_array()) throw ParseError("fusion: expected a list");
  for (size_t i = 0; i < fusion.size(); ++i) {
    const std::string path = "fusion[" + std::to_string(i) + "]";
    data.fusion.push_back({get_string(fusion[i], "a", path),
                           get_string(fusion[i], "b", path),
                           get_string(fusion[i], "c", path),
                           get_int(fusion[i], "n", path)});
  }

  if (auto it = doc.find("f_symbols"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("f_symbols: expected a list");
    for (size_t i = 0; i < it->size(); ++i) {
      const ordered_json& row = (*it)[i];
      const std::string path = "f_symbols[" + std::to_string(i) + "]";
      FSymbolEntry fs;
      fs.a = get_string(row, "a", path);
      fs.b = get_string(row, "b", path);
      fs.c = get_string(row, "c", path);
      fs.d = get_string(row, "d", path);
      fs.e = get_string(row, "e", path);
      fs.alpha = get_int(row, "alpha", path);
      fs.beta = get_int(row, "beta", path);
      fs.f = get_string(row, "f", path);
      fs.mu = get_int(row, "mu", path);
      fs.nu = get_int(row, "nu", path);
      fs.value = get_complex_fields(row, path);
      data.f_symbols.push_back(std::move(fs));
    }
  }

  if (auto it = doc.find("r_symbols"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("r_symbols: expected a list");
    for (size_t i = 0; i < it->size(); ++i) {
      const ordered_json& row = (*it)[i];
      const std::string path = "r_symbols[" + std::to_string(i) + "]";
      RSymbolEntry rs;
      rs.a = get_string(row, "a", path);
      rs.b = get_string(row, "b", path);
      rs.c = get_string(row, "c", path);
      rs.mu = get_int(row, "mu", path);
      rs.nu = get_int(row, "nu", path);
      rs.value = get_complex_fields(row, path);
      data.r_symbols.push_back(std::move(rs));
    }
  }

  const ordered_json& s = require(doc, "s_matrix", "model");
  if (!s.is_array()) throw ParseError("s_matrix: expected a list of [re, im]");
  for (size_t i = 0; i < s.size(); ++i)
    data.s_matrix.push_back(
        parse_complex_pair(s[i], "s_matrix[" + std::to_string(i) + "]"));

  return AnyonModel::from_data(data);
}

ModelPtr load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string serialize_model(const AnyonModel& model) {
  const ModelData data = model.to_data();
  ordered_json doc;
  doc["name"] = data.name;
  doc["charges"] = ordered_json::array();
  for (const ChargeSpec& c : data.charges)
    doc["charges"].push_back(
        {{"name", c.name}, {"dual", c.dual}, {"qdim", c.qdim}});
  doc["fusion"] = ordered_json::array();
  for (const FusionEntry& f : data.fusion)
    doc["fusion"].push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}, {"n", f.n}});
  doc["f_symbols"] = ordered_json::array();
  for (const FSymbolEntry& f : data.f_symbols)
    doc["f_symbols"].push_back({{"a", f.a},
                                {"b", f.b},
                                {"c", f.c},
                                {"d", f.d},
                                {"e", f.e},
                                {"alpha", f.alpha},
                                {"beta", f.beta},
                                {"f", f.f},
                                {"mu", f.mu},
                                {"nu", f.nu},
                                {"re", f.value.real()},
                                {"im", f.value.imag()}});
  doc["r_symbols"] = ordered_json::array();
  for (const RSymbolEntry& r : data.r_symbols)
    doc["r_symbols"].push_back({{"a", r.a},
                                {"b", r.b},
                                {"c", r.c},
                                {"mu", r.mu},
                                {"nu", r.nu},
                                {"re", r.value.real()},
                                {"im", r.value.imag()}});
  doc["s_matrix"] = ordered_json::array();
  for (const Complex& v : data.s_matrix)
    doc["s_matrix"].push_back({v.real(), v.imag()});
  return doc.dump(2) + "\n";
}

bool models_equal(const AnyonModel& lhs, const AnyonModel& rhs, double tol) {
  const ModelData a = lhs.to_data();
  const ModelData b = rhs.to_data();
  if (a.name != b.name) return false;
  if (a.charges.size() != b.charges.size()) return false;
  for (size_t i = 0; i < a.charges.size(); ++i) {
    if (a.charges[i].name != b.charges[i].name) return false;
    if (a.charges[i].dual != b.charges[i].dual) return false;
    if (std::abs(a.charges[i].qdim - b.charges[i].qdim) > tol) return false;
  }
  if (a.fusion.size() != b.fusion.size()) return false;
  for (size_t i = 0; i < a.fusion.size(); ++i) {
    const FusionEntry &x = a.fusion[i], &y = b.fusion[i];
    if (x.a != y.a || x.b != y.b || x.c != y.c || x.n != y.n) return false;
  }
  if (a.f_symbols.size() != b.f_symbols.size()) return false;
  for (size_t i = 0; i < a.f_symbols.size(); ++i) {
    const FSymbolEntry &x = a.f_symbols[i], &y = b.f_symbols[i];
    if (x.a != y.a || x.b != y.b || x.c != y.c || x.d != y.d || x.e != y.e ||
        x.f != y.f || x.alpha != y.alpha || x.beta != y.beta || x.mu != y.mu ||
        x.nu != y.nu)
      return false;
    if (std::abs(x.value - y.value) > tol) return false;
  }
  if (a.r_symbols.size() != b.r_symbols.size()) return false;
  for (size_t i = 0; i < a.r_symbols.size(); ++i) {
    const RSymbolEntry &x = a.r_symbols[i], &y = b.r_symbols[i];
    if (x.a != y.a || x.b != y.b || x.c != y.c || x.mu != y.mu || x.nu != y.nu)
      return false;
    if (std::abs(x.value - y.value) > tol) return false;
  }
  if (a.s_matrix.size() != b.s_matrix.size()) return false;
  for (size_t i = 0; i < a.s_matrix.size(); ++i)
    if (std::abs(a.s_matrix[i] - b.s_matrix[i]) > tol) return false;
  return true;
}

}  // namespace anyonint
