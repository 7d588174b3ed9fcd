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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "salv/coxeter.hpp"

namespace salv {

enum class ChamberPreset { Simplex, Interval };

ChamberPreset preset_from_string(std::string_view name);
std::string_view to_string(ChamberPreset preset);

/// The fundamental chamber, described by its family of acceptable subsets.
/// Immutable after construction.
class ChamberComplex {
 public:
  const CoxeterSystem& system() const { return system_; }
  /// Acceptable subsets in canonical order (empty set first).
  std::span<const TypeSubset> acceptable() const { return acceptable_; }
  bool is_acceptable(TypeSubset t) const;
  /// Manifold dimension l = max |T|.
  int dim() const { return dim_; }
  bool strict() const { return strict_; }
  /// Lenient-mode findings (purity, Euler test).
  const std::vector<std::string>& warnings() const { return warnings_; }
  /// Sum over acceptable T of (-1)^|T|.
  long long euler_sum() const;
  /// Acceptable subsets of cardinality k.
  std::vector<TypeSubset> acceptable_of_size(int k) const;

 private:
  friend ChamberComplex validate_chamber(CoxeterSystem, std::vector<TypeSubset>, bool);
  explicit ChamberComplex(CoxeterSystem system) : system_(std::move(system)) {}

  CoxeterSystem system_;
  std::vector<TypeSubset> acceptable_;
  int dim_ = 0;
  bool strict_ = false;
  std::vector<std::string> warnings_;
};

/// Checks the chamber invariants; the empty set is added when absent.
/// In strict mode impurity and a failed Euler test are errors, otherwise
/// they are recorded as warnings.
ChamberComplex validate_chamber(CoxeterSystem system, std::vector<TypeSubset> family, bool strict);

/// simplex: all proper subsets of S. interval: {∅, {s}, {t}} on rank 2.
ChamberComplex preset_chamber(ChamberPreset preset, CoxeterSystem system, bool strict = false);

/// Renders a subset as "{s,t}" using generator names (indices when empty).
std::string format_subset(TypeSubset t, std::span<const std::string> names = {});

}  // namespace salv
