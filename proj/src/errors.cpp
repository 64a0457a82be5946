// Copyright 2026 The qcycle Authors
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

#include "qcycle/errors.hpp"

namespace qcycle {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooFewLevels: return "TooFewLevels";
    case ErrorKind::NonIncreasingLevels: return "NonIncreasingLevels";
    case ErrorKind::IncompatibleProtocol: return "IncompatibleProtocol";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NegativeDuration: return "NegativeDuration";
    case ErrorKind::ScheduleMismatch: return "ScheduleMismatch";
    case ErrorKind::UnnormalizedInput: return "UnnormalizedInput";
    case ErrorKind::InfeasibleModuli: return "InfeasibleModuli";
    case ErrorKind::NoReferenceSlot: return "NoReferenceSlot";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NormDriftExceeded: return "NormDriftExceeded";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

}  // namespace qcycle
