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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "salv/arrangement.hpp"
#include "salv/chamber.hpp"

namespace salv {

/// Contents of an arrangement spec file:
///
///   {
///     "generators": ["s", "t"],
///     "coxeter_matrix": [[1, 3], [3, 1]],        // 0 encodes infinity
///     "chamber": {"preset": "interval"},          // or {"acceptable": [["s"], ["t"]]}
///     "options": {"strict": false, "max_length": null}
///   }
struct ArrangementSpec {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> coxeter_matrix;
  std::optional<ChamberPreset> preset;
  std::vector<std::vector<std::string>> acceptable;  // used when preset is empty
  bool strict = false;
  std::optional<std::size_t> max_length;

  friend bool operator==(const ArrangementSpec&, const ArrangementSpec&) = default;
};

/// Parses and checks the schema. Errors carry the JSON path of the offending
/// field; syntax errors are reported as ParseError with a line number.
ArrangementSpec parse_spec_text(const std::string& text);
/// Reads a file; when `path` does not exist, `path.json` is tried.
ArrangementSpec parse_spec(const std::filesystem::path& path);
std::string serialize_spec(const ArrangementSpec& spec);

CoxeterSystem build_system(const ArrangementSpec& spec);
ChamberComplex build_chamber(const ArrangementSpec& spec);
Arrangement build_arrangement(const ArrangementSpec& spec);

/// Renders an element with generator names ("s t s"; identity is "1").
std::string format_elem(const Elem& w, const std::vector<std::string>& names);

}  // namespace salv
