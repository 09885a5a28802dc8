// Copyright 2026 The qwalk Authors
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

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

enum class ErrorCode {
    SymmetryViolation,
    EmptyRow,
    InvalidSize,
    NonRealSpectrum,
    NonFinite,
    TooLarge,
    WidthExceeded,
    NotPowerOfTwo,
    RangeOverflow,
    IndexOutOfRange,
    ZeroVector,
    WidthMismatch,
    ShapeMismatch,
    LengthMismatch,
    ZeroExact,
    InvalidInput,
    Unsupported,
};

const char *error_code_name(ErrorCode code);

/// All library failures carry a machine-readable code; the message names
/// the violated condition.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two; callers check is_power_of_two first.
inline int log2_exact(std::uint64_t n) {
    int k = 0;
    while ((std::uint64_t{1} << k) < n) {
        ++k;
    }
    return k;
}

} // namespace qwalk
