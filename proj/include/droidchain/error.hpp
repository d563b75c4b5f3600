/*
 * Copyright (C) 2026 The droidchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace droidchain {

enum class Errc {
  MalformedLine,
  EmptySignature,
  NonPositiveCount,
  DuplicateAppId,
  UnknownLabel,
  MissingArtifacts,
  MixedNamespace,
  ModeMismatch,
  OriginMismatch,
  AppIdMismatch,
  EmptyInput,
  UnknownState,
  SingleClassTraining,
  RaggedMatrix,
  DimensionMismatch,
  TooFewSamples,
  NoCandidate,
  KTooLarge,
  MissingVector,
  SchemaMismatch,
  InvalidSpec,
  IoFailure,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::EmptySignature: return "EmptySignature";
    case Errc::NonPositiveCount: return "NonPositiveCount";
    case Errc::DuplicateAppId: return "DuplicateAppId";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::MissingArtifacts: return "MissingArtifacts";
    case Errc::MixedNamespace: return "MixedNamespace";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::OriginMismatch: return "OriginMismatch";
    case Errc::AppIdMismatch: return "AppIdMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnknownState: return "UnknownState";
    case Errc::SingleClassTraining: return "SingleClassTraining";
    case Errc::RaggedMatrix: return "RaggedMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::NoCandidate: return "NoCandidate";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::MissingVector: return "MissingVector";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

/// Structured error thrown by parsers and pipeline operations. `line()` is
/// 1-based and 0 when the error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)),
        code_(code),
        line_(line) {}

  Errc code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(Errc code, const std::string& message,
                            std::size_t line) {
    std::string out{errc_name(code)};
    if (line != 0) out += " at line " + std::to_string(line);
    if (!message.empty()) {
      out += ": ";
      out += message;
    }
    return out;
  }

  Errc code_;
  std::size_t line_;
};

}  // namespace droidchain
