// Copyright 2026 The ecdel Authors
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
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecdel {

enum class ErrorKind {
  MalformedHeader,
  DuplicateEdge,
  LoopEdge,
  ColorOutOfRange,
  VertexOutOfRange,
  EdgeNotPresent,
  InvalidSpec,
  ResourceLimit,
  NotBicolored,
  SpecNotColorDiverse,
  NotInClassT,
  PreconditionViolated,
  InvalidParams,
  MalformedFormula,
  MalformedInstance,
  NotTripartite,
  TriangleFound,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotBicolored: return "NotBicolored";
    case ErrorKind::SpecNotColorDiverse: return "SpecNotColorDiverse";
    case ErrorKind::NotInClassT: return "NotInClassT";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::MalformedFormula: return "MalformedFormula";
    case ErrorKind::MalformedInstance: return "MalformedInstance";
    case ErrorKind::NotTripartite: return "NotTripartite";
    case ErrorKind::TriangleFound: return "TriangleFound";
  }
  return "Unknown";
}

// All library failures surface as this exception. `line` is set by the
// parsers and refers to the 1-based input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<int> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            std::optional<int> line) {
    std::string out(to_string(kind));
    if (line) out += " at line " + std::to_string(*line);
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::optional<int> line_;
};

}  // namespace ecdel
