/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cppforge {

enum class ErrorKind {
    NotPrime,
    NotIrreducible,
    DivisionByZero,
    FieldMismatch,
    OutOfRange,
    Unsupported,
    OrderCapExceeded,
    MapEscapesKernel,
    PreconditionViolated,
    HypothesisFails,
    SearchCapExceeded,
    BadTableLength,
    ReconstructionMismatch,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `kind()` identifies the failure;
/// `detail()` carries the failing condition name (preconditions) or the
/// offending token (parse errors).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, std::string detail = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), detail_(std::move(detail))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

  private:
    ErrorKind kind_;
    std::string detail_;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MapEscapesKernel: return "MapEscapesKernel";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::BadTableLength: return "BadTableLength";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Throws PreconditionViolated naming `condition` unless `holds`.
inline void require(bool holds, const std::string& condition)
{
    if (!holds) {
        throw Error(ErrorKind::PreconditionViolated, condition + " does not hold", condition);
    }
}

} // namespace cppforge
