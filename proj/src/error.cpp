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

#include "salv/error.hpp"

namespace salv {

namespace {

std::string render(ErrorKind kind, const std::string& module,
                   const std::string& message, const std::string& path) {
  std::string out = module + ": " + std::string(to_string(kind));
  if (!path.empty()) out += " at " + path;
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MatrixAsymmetric: return "MatrixAsymmetric";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::BadBondOrder: return "BadBondOrder";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::WouldNotTerminate: return "WouldNotTerminate";
    case ErrorKind::MissingSingleton: return "MissingSingleton";
    case ErrorKind::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorKind::NonSphericalMember: return "NonSphericalMember";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::EulerTestFailed: return "EulerTestFailed";
    case ErrorKind::PresetInapplicable: return "PresetInapplicable";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::MalformedPair: return "MalformedPair";
    case ErrorKind::TruncatedPoset: return "TruncatedPoset";
    case ErrorKind::BoundaryCompositionNonzero: return "BoundaryCompositionNonzero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::CheckFailed: return "CheckFailed";
  }
  return "UnknownError";
}

ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WouldNotTerminate:
    case ErrorKind::TruncatedPoset:
      return ErrorClass::Infeasible;
    case ErrorKind::BoundaryCompositionNonzero:
    case ErrorKind::CheckFailed:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Validation;
  }
}

Error::Error(ErrorKind kind, std::string module, const std::string& message,
             std::string path)
    : std::runtime_error(render(kind, module, message, path)),
      kind_(kind),
      module_(std::move(module)),
      path_(std::move(path)),
      detail_(message) {}

Error Error::with_path(std::string path) const {
  return Error(kind_, module_, detail_, std::move(path));
}

}  // namespace salv
