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

#ifndef ORDCONE_ERROR_HPP
#define ORDCONE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordcone {

enum class ErrorKind {
    Parse,
    EmptyInput,
    ZeroVectorInput,
    DimensionMismatch,
    NoSeparator,
    NoCone,
    IsIdentity,
    EmptyWord,
    DepthExceedsCap,
    LevelExceedsCap,
    RankMismatch,
    CommonRoot,
    DepthCapExceeded,
    IdentityAutomorphism,
    NonAutomorphism,
    NotFoundWithinBall,
    IdentityElement,
    InvalidAutomorphism,
    Overflow,
    Internal,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the core carries a kind, so the C API can map it to
// a status code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Internal invariant check; never compiled out.
inline void ensure(bool condition, const char* what) {
    if (!condition) {
        fail(ErrorKind::Internal, what);
    }
}

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

template <typename T>
Sign sign_of(const T& value) {
    if (value > 0) return Sign::Positive;
    if (value < 0) return Sign::Negative;
    return Sign::Zero;
}

inline char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : s == Sign::Negative ? '-' : '0'; }

}  // namespace ordcone

#endif  // ORDCONE_ERROR_HPP
