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

#include "dpst/numerics.hpp"

#include "dpst/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dpst::numerics
{

bool all_finite(const ComplexMatrix &a)
{
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        for (Eigen::Index r = 0; r < a.rows(); ++r)
        {
            const Complex z = a(r, c);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                return false;
        }
    return true;
}

void require_finite(const ComplexMatrix &a, const char *what)
{
    if (!all_finite(a))
        throw DomainError(std::string(what) + " contains non-finite entries");
}

SvdResult svd(const ComplexMatrix &a)
{
    if (a.size() == 0)
        throw ShapeError("svd: input matrix is empty");
    require_finite(a, "svd input");

    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);

    SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
    if (!all_finite(out.u) || !all_finite(out.v) || !out.singular_values.allFinite())
        throw NumericalError("svd: decomposition did not converge", static_cast<std::size_t>(a.rows()),
                             static_cast<std::size_t>(a.cols()));
    return out;
}

double condition_number(const ComplexMatrix &a)
{
    const RealVector s = svd(a).singular_values;
    const double s_max = s(0);
    const double s_min = s(s.size() - 1);
    if (s_max == 0.0 || s_min <= kRankTolerance * s_max)
        return std::numeric_limits<double>::infinity();
    return s_max / s_min;
}

std::size_t rank(const ComplexMatrix &a)
{
    const RealVector s = svd(a).singular_values;
    const double threshold = kRankTolerance * s(0);
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > threshold)
            ++count;
    return count;
}

double frobenius_norm(const ComplexMatrix &a)
{
    return a.norm();
}

ComplexMatrix hermitian_solve(const ComplexMatrix &a, const ComplexMatrix &b)
{
    if (a.rows() != a.cols())
        throw ShapeError("hermitian_solve: matrix is not square");
    if (b.rows() != a.rows())
        throw ShapeError("hermitian_solve: right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                         std::to_string(a.rows()));
    require_finite(a, "hermitian_solve matrix");
    require_finite(b, "hermitian_solve right-hand side");

    const auto n = static_cast<std::size_t>(a.rows());
    Eigen::LLT<ComplexMatrix> llt(a);
    if (llt.info() != Eigen::Success)
        throw SingularSystemError("hermitian_solve: matrix is not positive definite", n, n);

    // LLT does not flag a pivot that rounding left slightly positive; compare against the diagonal scale.
    const RealVector pivots = llt.matrixL().toDenseMatrix().diagonal().real();
    const double scale = a.diagonal().real().cwiseAbs().maxCoeff();
    const double floor = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
    if (!std::isfinite(pivots.minCoeff()) || pivots.minCoeff() * pivots.minCoeff() <= floor)
        throw SingularSystemError("hermitian_solve: matrix is not positive definite", n, n);

    ComplexMatrix x = llt.solve(b);
    if (!all_finite(x))
        throw SingularSystemError("hermitian_solve: solution is not finite", n, n);
    return x;
}

} // namespace dpst::numerics
