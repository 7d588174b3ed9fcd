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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "salv/commands.hpp"

namespace salv {

enum class Suite { Coxeter, Chamber, Arrangement, Salvetti, Homology, Cli, All };
Suite suite_from_string(std::string_view name);
std::string_view to_string(Suite suite);

struct CheckOutcome {
  std::string suite;
  std::string name;
  std::string system;
  bool passed = false;
  std::string detail;  // failure description
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> outcomes;  // in a fixed order, independent of threads

  bool passed() const;
  std::size_t failures() const;
};

/// A bundled system: its spec and a short name ("I2(3)", "A3", ...).
struct BundledSystem {
  std::string name;
  ArrangementSpec spec;
};
std::vector<BundledSystem> bundled_systems();

/// Runs the invariant suites on the bundled systems using up to `threads`
/// workers. Randomized checks draw from streams derived from `seed`.
CheckReport run_checks(Suite suite, std::uint64_t seed, unsigned threads);
std::string format_report(const CheckReport& report, Format format);

/// SALV_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
unsigned threads_from_env();

}  // namespace salv
