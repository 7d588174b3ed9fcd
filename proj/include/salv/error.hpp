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

#include <stdexcept>
#include <string>
#include <string_view>

namespace salv {

enum class ErrorKind {
  // coxeter
  MatrixAsymmetric,
  BadDiagonal,
  BadBondOrder,
  DimensionMismatch,
  LetterOutOfRange,
  WouldNotTerminate,
  // chamber
  MissingSingleton,
  NotDownwardClosed,
  NonSphericalMember,
  NotPure,
  EulerTestFailed,
  PresetInapplicable,
  // arrangement / salvetti
  PreconditionViolated,
  MalformedPair,
  TruncatedPoset,
  // homology
  BoundaryCompositionNonzero,
  // cli
  ParseError,
  UnknownGenerator,
  CheckFailed,
};

/// How a failure is reported to the outside world (CLI exit codes, C status).
enum class ErrorClass { Validation, Infeasible, Internal };

std::string_view to_string(ErrorKind kind);
ErrorClass classify(ErrorKind kind);

/// Every failure raised by the library. `module` names the originating
/// module ("coxeter", "chamber", ...); `path` optionally names the offending
/// field of an arrangement spec file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message,
        std::string path = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& path() const noexcept { return path_; }
  const std::string& detail() const noexcept { return detail_; }
  ErrorClass error_class() const noexcept { return classify(kind_); }

  /// Same error, re-attributed to a spec-file field.
  Error with_path(std::string path) const;

 private:
  ErrorKind kind_;
  std::string module_;
  std::string path_;
  std::string detail_;
};

}  // namespace salv
