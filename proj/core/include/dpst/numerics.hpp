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

#ifndef DPST_NUMERICS_HPP
#define DPST_NUMERICS_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace dpst::numerics
{

using Complex = std::complex<double>;

// Dense complex matrix carrying channels, kernels, precoders and covariances.
// Stored entries are required to be finite; operations check this at their boundary.
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Singular values at or below this fraction of the largest one count as zero.
inline constexpr double kRankTolerance = 1e-10;

// Thin SVD: A = u * diag(singular_values) * v^H with singular values sorted descending.
struct SvdResult
{
    ComplexMatrix u;
    RealVector singular_values;
    ComplexMatrix v;
};

// Throws ShapeError for empty input, DomainError for non-finite entries and
// NumericalError when the decomposition returns non-finite factors.
SvdResult svd(const ComplexMatrix &a);

// sigma_max / sigma_min. Returns +infinity when sigma_min <= kRankTolerance * sigma_max,
// which includes the zero matrix.
double condition_number(const ComplexMatrix &a);

// Number of singular values strictly above kRankTolerance * sigma_max.
std::size_t rank(const ComplexMatrix &a);

double frobenius_norm(const ComplexMatrix &a);

// Solves A X = B for Hermitian positive definite A via Cholesky.
// Throws SingularSystemError when A is not positive definite.
ComplexMatrix hermitian_solve(const ComplexMatrix &a, const ComplexMatrix &b);

// True when every entry has finite real and imaginary parts.
bool all_finite(const ComplexMatrix &a);

// Throws DomainError naming `what` when `a` holds a NaN or Inf.
void require_finite(const ComplexMatrix &a, const char *what);

} // namespace dpst::numerics

#endif
