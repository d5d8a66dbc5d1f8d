// SPDX-License-Identifier: Apache-2.0
//
// dpst - pulse shaping diversity simulator for dense small cell MIMO networks
// Copyright (C) 2026 The dpst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DPST_ERRORS_HPP
#define DPST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpst
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Operand dimensions do not fit the operation.
class ShapeError : public Error
{
public:
    using Error::Error;
};

// Scalar argument outside the domain of the function (e.g. a non-positive distance).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Input that is well-formed but carries no usable information (zero-norm channel).
class DegenerateInputError : public Error
{
public:
    using Error::Error;
};

// A decomposition did not converge or produced non-finite output.
class NumericalError : public Error
{
public:
    NumericalError(const std::string &what, std::size_t rows, std::size_t cols)
        : Error(what + " (" + std::to_string(rows) + "x" + std::to_string(cols) + ")"), rows_(rows), cols_(cols)
    {
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
};

// Linear system matrix is not Hermitian positive definite.
class SingularSystemError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

// Invalid or unknown configuration entry. key() names the offending entry.
class ConfigError : public Error
{
public:
    ConfigError(std::string key, const std::string &what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace dpst

#endif
