/* Copyright 2026 The ordcone Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "ordcone/error.hpp"

namespace ordcone {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ZeroVectorInput: return "ZeroVectorInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NoSeparator: return "NoSeparator";
        case ErrorKind::NoCone: return "NoCone";
        case ErrorKind::IsIdentity: return "IsIdentity";
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::DepthExceedsCap: return "DepthExceedsCap";
        case ErrorKind::LevelExceedsCap: return "LevelExceedsCap";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::CommonRoot: return "CommonRoot";
        case ErrorKind::DepthCapExceeded: return "DepthCapExceeded";
        case ErrorKind::IdentityAutomorphism: return "IdentityAutomorphism";
        case ErrorKind::NonAutomorphism: return "NonAutomorphism";
        case ErrorKind::NotFoundWithinBall: return "NotFoundWithinBall";
        case ErrorKind::IdentityElement: return "IdentityElement";
        case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace ordcone
