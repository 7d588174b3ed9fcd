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

#include <doctest.h>

#include "helpers.hpp"

using namespace testing;
using salv::ChamberPreset;
using salv::ErrorKind;
using salv::preset_chamber;
using salv::validate_chamber;

TEST_CASE("interval preset on a dihedral group") {
  const auto c = preset_chamber(ChamberPreset::Interval, CoxeterSystem(salv::matrices::dihedral(3)));
  CHECK(c.acceptable().size() == 3);
  CHECK(c.acceptable()[0].empty());
  CHECK(c.dim() == 1);
  CHECK(c.euler_sum() == -1);
  CHECK(c.warnings().empty());
  CHECK(c.is_acceptable(TypeSubset{1}));
  CHECK_FALSE(c.is_acceptable(TypeSubset{0, 1}));
}

TEST_CASE("simplex preset takes every proper subset") {
  const auto c = preset_chamber(ChamberPreset::Simplex, CoxeterSystem(salv::matrices::type_a(3)));
  CHECK(c.acceptable().size() == 7);
  CHECK(c.dim() == 2);
  CHECK(c.euler_sum() == 1);
  CHECK(c.acceptable_of_size(2).size() == 3);
  CHECK(c.warnings().empty());
  // Canonical order: by size, then members.
  CHECK(salv::format_subset(c.acceptable()[1]) == "{0}");
  CHECK(salv::format_subset(c.acceptable()[4]) == "{0,1}");
  CHECK(salv::format_subset(c.acceptable()[6]) == "{1,2}");
  const auto affine = preset_chamber(ChamberPreset::Simplex, CoxeterSystem(salv::matrices::affine_a2()));
  CHECK(affine.acceptable().size() == 7);
}

TEST_CASE("presets that do not fit the system are refused") {
  CHECK(error_kind([] { preset_chamber(ChamberPreset::Interval, CoxeterSystem(salv::matrices::type_a(3))); }) ==
        ErrorKind::PresetInapplicable);
  const CoxeterMatrix hyperbolic_pair({{1, 0, 2}, {0, 1, 3}, {2, 3, 1}});
  CHECK(error_kind([&] { preset_chamber(ChamberPreset::Simplex, CoxeterSystem(hyperbolic_pair)); }) ==
        ErrorKind::PresetInapplicable);
  CHECK(error_kind([] { salv::preset_from_string("cube"); }) == ErrorKind::PresetInapplicable);
  CHECK(salv::preset_from_string("simplex") == ChamberPreset::Simplex);
  CHECK(salv::to_string(ChamberPreset::Interval) == "interval");
}

TEST_CASE("families are checked for the chamber invariants") {
  const auto i2 = [] { return CoxeterSystem(salv::matrices::dihedral(3)); };
  const auto a3 = [] { return CoxeterSystem(salv::matrices::type_a(3)); };
  CHECK(error_kind([&] { validate_chamber(i2(), {TypeSubset{0}}, false); }) == ErrorKind::MissingSingleton);
  CHECK(error_kind([&] { validate_chamber(i2(), {TypeSubset{0}, TypeSubset{3}}, false); }) ==
        ErrorKind::LetterOutOfRange);
  CHECK(error_kind([&] {
          validate_chamber(a3(), {TypeSubset{0}, TypeSubset{1}, TypeSubset{2}, TypeSubset{0, 1, 2}}, false);
        }) == ErrorKind::NotDownwardClosed);
  const CoxeterMatrix free_pair({{1, 0}, {0, 1}});
  CHECK(error_kind([&] {
          validate_chamber(CoxeterSystem(free_pair), {TypeSubset{0}, TypeSubset{1}, TypeSubset{0, 1}}, false);
        }) == ErrorKind::NonSphericalMember);
}

TEST_CASE("the empty set is always acceptable") {
  const auto c = validate_chamber(CoxeterSystem(salv::matrices::dihedral(4)), {TypeSubset{1}, TypeSubset{0}}, false);
  CHECK(c.acceptable().size() == 3);
  CHECK(c.acceptable()[0].empty());
}

TEST_CASE("impure families warn in lenient mode and fail in strict mode") {
  const std::vector<TypeSubset> family{TypeSubset{0}, TypeSubset{1}, TypeSubset{2}, TypeSubset{0, 1}};
  const auto lenient = validate_chamber(CoxeterSystem(salv::matrices::type_a(3)), family, false);
  REQUIRE_FALSE(lenient.warnings().empty());
  CHECK(lenient.warnings()[0].rfind("NotPure", 0) == 0);
  CHECK(error_kind([&] { validate_chamber(CoxeterSystem(salv::matrices::type_a(3)), family, true); }) ==
        ErrorKind::NotPure);
}

TEST_CASE("the disk family fails the alternating-count test") {
  // {∅, {s}, {t}, {s,t}}: 1 - 2 + 1 = 0, not (-1)^2.
  const std::vector<TypeSubset> family{TypeSubset{0}, TypeSubset{1}, TypeSubset{0, 1}};
  const auto lenient = validate_chamber(CoxeterSystem(salv::matrices::dihedral(3)), family, false);
  CHECK(lenient.dim() == 2);
  CHECK(lenient.euler_sum() == 0);
  REQUIRE(lenient.warnings().size() == 1);
  CHECK(lenient.warnings()[0].rfind("EulerTestFailed", 0) == 0);
  CHECK(error_kind([&] { validate_chamber(CoxeterSystem(salv::matrices::dihedral(3)), family, true); }) ==
        ErrorKind::EulerTestFailed);
}

TEST_CASE("rank one with a single wall") {
  const auto c = validate_chamber(CoxeterSystem(salv::matrices::rank_one()), {TypeSubset{0}}, false);
  CHECK(c.dim() == 1);
  CHECK(c.euler_sum() == 0);
  CHECK(c.warnings().size() == 1);
}

TEST_CASE("alternating count equals (-1)^dim for simplex chambers of finite groups") {
  for (const auto& m : {salv::matrices::type_a(2), salv::matrices::type_a(3), salv::matrices::type_a(4),
                        salv::matrices::type_b(4), salv::matrices::type_h3(), d4(), f4()}) {
    const auto c = preset_chamber(ChamberPreset::Simplex, CoxeterSystem(m));
    CHECK(c.euler_sum() == (c.dim() % 2 == 0 ? 1 : -1));
    CHECK(c.dim() == m.rank() - 1);
  }
}

TEST_CASE("subset rendering") {
  const std::vector<std::string> names{"s", "t", "u"};
  CHECK(salv::format_subset(TypeSubset{}, names) == "{}");
  CHECK(salv::format_subset(TypeSubset{0, 2}, names) == "{s,u}");
  CHECK(salv::format_subset(TypeSubset{1}) == "{1}");
}
