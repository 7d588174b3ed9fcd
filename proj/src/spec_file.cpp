// Copyright 2026 The salv Authors
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

#include "salv/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "salv/error.hpp"

namespace salv {

namespace {

constexpr const char* kModule = "cli";

using nlohmann::json;

[[noreturn]] void fail(ErrorKind kind, const std::string& path, const std::string& message) {
  throw Error(kind, kModule, message, path);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::ParseError, path, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(ErrorKind::ParseError, path, "expected an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(ErrorKind::ParseError, path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(ErrorKind::ParseError, path, "expected an array");
  return v;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(known.begin(), known.end(), [&key](const char* k) { return key == k; })) {
      fail(ErrorKind::ParseError, path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string entry_path(std::size_t i, std::size_t j) {
  return "coxeter_matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

// First entry the system constructor would reject, scanned in the same order.
std::string offending_entry(const std::vector<std::vector<int>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i][i] != 1) return entry_path(i, i);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i] || (m[i][j] != kInfinity && m[i][j] < 2)) return entry_path(i, j);
    }
  }
  return "coxeter_matrix";
}

}  // namespace

ArrangementSpec parse_spec_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::ParseError, kModule, "line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) fail(ErrorKind::ParseError, "", "top level must be an object");
  reject_unknown(root, {"generators", "coxeter_matrix", "chamber", "options"}, "");

  ArrangementSpec spec;
  const json& gens = as_array(require(root, "generators", ""), "generators");
  if (gens.empty()) fail(ErrorKind::ParseError, "generators", "at least one generator is required");
  if (gens.size() > static_cast<std::size_t>(kMaxRank)) {
    fail(ErrorKind::DimensionMismatch, "generators", "at most " + std::to_string(kMaxRank) + " generators");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    std::string name = as_string(gens[i], path);
    if (name.empty()) fail(ErrorKind::ParseError, path, "empty generator name");
    if (std::find(spec.generators.begin(), spec.generators.end(), name) != spec.generators.end()) {
      fail(ErrorKind::ParseError, path, "duplicate generator name '" + name + "'");
    }
    spec.generators.push_back(std::move(name));
  }

  const json& matrix = as_array(require(root, "coxeter_matrix", ""), "coxeter_matrix");
  if (matrix.size() != gens.size()) {
    fail(ErrorKind::DimensionMismatch, "coxeter_matrix",
         std::to_string(matrix.size()) + " rows for " + std::to_string(gens.size()) + " generators");
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string row_path = "coxeter_matrix[" + std::to_string(i) + "]";
    const json& row = as_array(matrix[i], row_path);
    if (row.size() != gens.size()) {
      fail(ErrorKind::DimensionMismatch, row_path,
           std::to_string(row.size()) + " entries for " + std::to_string(gens.size()) + " generators");
    }
    std::vector<int> values;
    for (std::size_t j = 0; j < row.size(); ++j) values.push_back(as_int(row[j], entry_path(i, j)));
    spec.coxeter_matrix.push_back(std::move(values));
  }

  const json& chamber = require(root, "chamber", "");
  if (!chamber.is_object()) fail(ErrorKind::ParseError, "chamber", "expected an object");
  reject_unknown(chamber, {"preset", "acceptable"}, "chamber");
  const bool has_preset = chamber.contains("preset");
  if (has_preset == chamber.contains("acceptable")) {
    fail(ErrorKind::ParseError, "chamber", "exactly one of 'preset' or 'acceptable' is required");
  }
  if (has_preset) {
    const std::string name = as_string(chamber["preset"], "chamber.preset");
    if (name != "simplex" && name != "interval") {
      fail(ErrorKind::ParseError, "chamber.preset", "expected \"simplex\" or \"interval\"");
    }
    spec.preset = preset_from_string(name);
  } else {
    const json& family = as_array(chamber["acceptable"], "chamber.acceptable");
    for (std::size_t i = 0; i < family.size(); ++i) {
      const std::string set_path = "chamber.acceptable[" + std::to_string(i) + "]";
      std::vector<std::string> names;
      const json& members = as_array(family[i], set_path);
      for (std::size_t j = 0; j < members.size(); ++j) {
        const std::string path = set_path + "[" + std::to_string(j) + "]";
        std::string name = as_string(members[j], path);
        if (std::find(spec.generators.begin(), spec.generators.end(), name) == spec.generators.end()) {
          throw Error(ErrorKind::UnknownGenerator, kModule, "'" + name + "'", path);
        }
        names.push_back(std::move(name));
      }
      spec.acceptable.push_back(std::move(names));
    }
  }

  if (auto it = root.find("options"); it != root.end()) {
    if (!it->is_object()) fail(ErrorKind::ParseError, "options", "expected an object");
    reject_unknown(*it, {"strict", "max_length"}, "options");
    if (auto s = it->find("strict"); s != it->end()) {
      if (!s->is_boolean()) fail(ErrorKind::ParseError, "options.strict", "expected a boolean");
      spec.strict = s->get<bool>();
    }
    if (auto b = it->find("max_length"); b != it->end() && !b->is_null()) {
      if (!b->is_number_unsigned()) fail(ErrorKind::ParseError, "options.max_length", "expected a nonnegative integer");
      spec.max_length = b->get<std::size_t>();
    }
  }
  return spec;
}

ArrangementSpec parse_spec(const std::filesystem::path& path) {
  std::filesystem::path actual = path;
  if (!std::filesystem::exists(actual)) {
    std::filesystem::path with_ext = path;
    with_ext += ".json";
    if (std::filesystem::exists(with_ext)) actual = with_ext;
  }
  std::ifstream in(actual);
  if (!in) throw Error(ErrorKind::ParseError, kModule, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

std::string serialize_spec(const ArrangementSpec& spec) {
  nlohmann::ordered_json out;
  out["generators"] = spec.generators;
  out["coxeter_matrix"] = spec.coxeter_matrix;
  if (spec.preset) {
    out["chamber"] = {{"preset", std::string(to_string(*spec.preset))}};
  } else {
    out["chamber"] = {{"acceptable", spec.acceptable}};
  }
  out["options"] = {{"strict", spec.strict}, {"max_length", nullptr}};
  if (spec.max_length) out["options"]["max_length"] = *spec.max_length;
  return out.dump(2) + "\n";
}

CoxeterSystem build_system(const ArrangementSpec& spec) {
  try {
    return CoxeterSystem(CoxeterMatrix(spec.coxeter_matrix));
  } catch (const Error& e) {
    throw e.with_path(offending_entry(spec.coxeter_matrix));
  }
}

ChamberComplex build_chamber(const ArrangementSpec& spec) {
  CoxeterSystem system = build_system(spec);
  try {
    if (spec.preset) return preset_chamber(*spec.preset, std::move(system), spec.strict);
    std::vector<TypeSubset> family;
    for (const auto& names : spec.acceptable) {
      TypeSubset t;
      for (const auto& name : names) {
        const auto pos = std::find(spec.generators.begin(), spec.generators.end(), name) - spec.generators.begin();
        t = t.with(static_cast<Gen>(pos));
      }
      family.push_back(t);
    }
    return validate_chamber(std::move(system), std::move(family), spec.strict);
  } catch (const Error& e) {
    throw e.with_path("chamber");
  }
}

Arrangement build_arrangement(const ArrangementSpec& spec) { return Arrangement(build_chamber(spec)); }

std::string format_elem(const Elem& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) out += " ";
    out += w.word[i] < names.size() ? names[w.word[i]] : std::to_string(w.word[i]);
  }
  return out;
}

}  // namespace salv
