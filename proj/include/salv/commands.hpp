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

#include <optional>
#include <string>
#include <string_view>

#include "salv/error.hpp"
#include "salv/homology.hpp"
#include "salv/salvetti.hpp"
#include "salv/spec_file.hpp"

namespace salv {

enum class Format { Text, Json, Dot };
Format format_from_string(std::string_view name);

/// complement: order complex of Sal. quotient: the orbit Δ-complex.
/// manifold: order complex of the face poset. walls: its union-of-walls part.
enum class Space { Complement, Quotient, Manifold, Walls };
Space space_from_string(std::string_view name);
std::string_view to_string(Space space);

/// A parsed spec together with the structures built from it.
class Session {
 public:
  explicit Session(ArrangementSpec spec);

  const ArrangementSpec& spec() const { return spec_; }
  const Salvetti& salvetti() const { return salvetti_; }
  const Arrangement& arrangement() const { return salvetti_.arrangement(); }
  const CoxeterSystem& system() const { return salvetti_.system(); }
  const std::vector<std::string>& names() const { return spec_.generators; }

 private:
  ArrangementSpec spec_;
  Salvetti salvetti_;
};

std::string cmd_validate(const Session& s, Format format);
/// max_length overrides the spec file option when set.
std::string cmd_faces(const Session& s, Format format, std::optional<std::size_t> max_length = {});
std::string cmd_salvetti(const Session& s, Format format);
std::string cmd_quotient(const Session& s, Format format);
std::string cmd_homology(const Session& s, Space space, Format format,
                         std::optional<std::size_t> max_length = {});
std::string cmd_pi1(const Session& s, Format format);
std::string cmd_euler(const Session& s, Format format);

HomologyResult space_homology(const Session& s, Space space, std::optional<std::size_t> max_length = {});

/// 1 validation, 2 infeasible, 3 internal.
int exit_code(ErrorClass c);

}  // namespace salv
