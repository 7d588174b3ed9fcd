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

#include "salv/chamber.hpp"

#include <algorithm>

#include "salv/error.hpp"

namespace salv {

namespace {

constexpr const char* kModule = "chamber";

}  // namespace

ChamberPreset preset_from_string(std::string_view name) {
  if (name == "simplex") return ChamberPreset::Simplex;
  if (name == "interval") return ChamberPreset::Interval;
  throw Error(ErrorKind::PresetInapplicable, kModule, "unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(ChamberPreset preset) {
  return preset == ChamberPreset::Simplex ? "simplex" : "interval";
}

std::string format_subset(TypeSubset t, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  for (Gen s : t.members()) {
    if (!first) out += ",";
    first = false;
    out += s < names.size() ? names[s] : std::to_string(s);
  }
  return out + "}";
}

bool ChamberComplex::is_acceptable(TypeSubset t) const {
  return std::find(acceptable_.begin(), acceptable_.end(), t) != acceptable_.end();
}

long long ChamberComplex::euler_sum() const {
  long long sum = 0;
  for (TypeSubset t : acceptable_) sum += t.size() % 2 == 0 ? 1 : -1;
  return sum;
}

std::vector<TypeSubset> ChamberComplex::acceptable_of_size(int k) const {
  std::vector<TypeSubset> out;
  for (TypeSubset t : acceptable_) {
    if (t.size() == k) out.push_back(t);
  }
  return out;
}

ChamberComplex validate_chamber(CoxeterSystem system, std::vector<TypeSubset> family, bool strict) {
  const int rank = system.rank();
  const TypeSubset all = system.generators();
  for (TypeSubset t : family) {
    if (!t.subset_of(all)) {
      throw Error(ErrorKind::LetterOutOfRange, kModule,
                  "acceptable subset " + format_subset(t) + " names a generator outside 0.." +
                      std::to_string(rank - 1));
    }
  }
  family.push_back(TypeSubset{});
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());

  auto contains = [&family](TypeSubset t) {
    return std::binary_search(family.begin(), family.end(), t, canonical_less);
  };
  for (int i = 0; i < rank; ++i) {
    const TypeSubset single{static_cast<Gen>(i)};
    if (!contains(single)) {
      throw Error(ErrorKind::MissingSingleton, kModule, "singleton " + format_subset(single) + " is not acceptable");
    }
  }
  // Closure under removing one element implies full downward closure.
  for (TypeSubset t : family) {
    for (Gen s : t.members()) {
      if (!contains(t.without(s))) {
        throw Error(ErrorKind::NotDownwardClosed, kModule,
                    format_subset(t) + " is acceptable but its subset " + format_subset(t.without(s)) + " is not");
      }
    }
  }
  for (TypeSubset t : family) {
    if (!system.is_spherical(t)) {
      throw Error(ErrorKind::NonSphericalMember, kModule, format_subset(t) + " generates an infinite subgroup");
    }
  }

  ChamberComplex out(std::move(system));
  out.strict_ = strict;
  for (TypeSubset t : family) out.dim_ = std::max(out.dim_, t.size());
  out.acceptable_ = std::move(family);

  auto problem = [&](ErrorKind kind, const std::string& message) {
    if (strict) throw Error(kind, kModule, message);
    out.warnings_.push_back(std::string(to_string(kind)) + ": " + message);
  };
  for (TypeSubset t : out.acceptable_) {
    if (t.size() == out.dim_) continue;
    const bool maximal = std::none_of(out.acceptable_.begin(), out.acceptable_.end(), [t](TypeSubset u) {
      return u != t && t.subset_of(u);
    });
    if (maximal) {
      problem(ErrorKind::NotPure, "maximal subset " + format_subset(t) + " has cardinality " +
                                      std::to_string(t.size()) + " < " + std::to_string(out.dim_));
      break;
    }
  }
  const long long expected = out.dim_ % 2 == 0 ? 1 : -1;
  if (out.euler_sum() != expected) {
    problem(ErrorKind::EulerTestFailed, "alternating count " + std::to_string(out.euler_sum()) +
                                            " differs from (-1)^" + std::to_string(out.dim_) + " = " +
                                            std::to_string(expected));
  }
  return out;
}

ChamberComplex preset_chamber(ChamberPreset preset, CoxeterSystem system, bool strict) {
  const int rank = system.rank();
  std::vector<TypeSubset> family;
  if (preset == ChamberPreset::Interval) {
    if (rank != 2) {
      throw Error(ErrorKind::PresetInapplicable, kModule,
                  "interval preset needs rank 2, got rank " + std::to_string(rank));
    }
    family = {TypeSubset{0}, TypeSubset{1}};
  } else {
    if (rank > 24) {
      throw Error(ErrorKind::PresetInapplicable, kModule, "simplex preset is limited to rank 24");
    }
    const TypeSubset all = system.generators();
    for (std::uint64_t bits = 0; bits < all.bits(); ++bits) {
      const TypeSubset t(bits);
      if (!system.is_spherical(t)) {
        throw Error(ErrorKind::PresetInapplicable, kModule,
                    "simplex preset needs every proper subset spherical; " + format_subset(t) + " is not");
      }
      family.push_back(t);
    }
  }
  return validate_chamber(std::move(system), std::move(family), strict);
}

}  // namespace salv
