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

#include "dpst/pulse.hpp"

#include "dpst/errors.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <string>

namespace dpst::pulse
{

void PulseConfig::validate() const
{
    if (!(tau_fraction >= 0.0 && tau_fraction < 1.0))
        throw ConfigError("tau_frac", "must lie in [0, 1), got " + std::to_string(tau_fraction));
    if (tx_oversampling < 1)
        throw ConfigError("tx_os", "must be >= 1");
    if (rx_oversampling < 1)
        throw ConfigError("rx_os", "must be >= 1");
    if (block_symbols < 2)
        throw ConfigError("block_symbols", "must be >= 2");
}

double sinc(double x)
{
    if (x == std::nearbyint(x))
        return x == 0.0 ? 1.0 : 0.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

ComplexMatrix interp_matrix(double tau, int m, int n)
{
    if (m < 1 || n < 1 || n % m != 0)
        throw ConfigError("oversampling", "interpolation output length " + std::to_string(n) +
                                              " is not a positive multiple of input length " + std::to_string(m));
    if (!std::isfinite(tau))
        throw DomainError("interp_matrix: delay must be finite");

    const int ratio = n / m;
    ComplexMatrix out(n, m);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < m; ++j)
            out(k, j) = sinc(static_cast<double>(k) / ratio + tau - static_cast<double>(j));
    return out;
}

PulseKernels PulseKernels::build(const PulseConfig &config)
{
    config.validate();
    const int m = config.block_symbols;
    const int n_tx = m * config.tx_oversampling;
    const int n_rx = n_tx * config.rx_oversampling;

    PulseKernels k;
    k.config = config;
    k.tx_direct = interp_matrix(0.0, m, n_tx);
    k.tx_delayed = interp_matrix(config.tau_fraction, m, n_tx);
    k.rx = interp_matrix(0.0, n_tx, n_rx);
    k.shaped_direct = k.rx * k.tx_direct;
    k.shaped_delayed = k.rx * k.tx_delayed;

    ComplexMatrix stacked(n_rx, 2 * m);
    stacked << k.shaped_direct, k.shaped_delayed;
    const Eigen::HouseholderQR<ComplexMatrix> qr(stacked);
    k.shaped_basis = qr.householderQ() * ComplexMatrix::Identity(n_rx, 2 * m);
    const ComplexMatrix r = qr.matrixQR().topRows(2 * m).triangularView<Eigen::Upper>();
    k.direct_coeffs = r.leftCols(m);
    k.delayed_coeffs = r.rightCols(m);
    return k;
}

ComplexMatrix oversampled_channel(const ComplexMatrix &h, const PulseKernels &kernels)
{
    if (h.rows() != 2 || h.cols() != 2)
        throw ShapeError("oversampled_channel: channel must be 2x2");
    numerics::require_finite(h, "oversampled_channel input");

    // Single-tap channel: the convolution with each kernel is a scalar multiply.
    const Eigen::Index rows = kernels.shaped_direct.rows();
    const Eigen::Index m = kernels.shaped_direct.cols();
    ComplexMatrix out(2 * rows, 2 * m);
    for (Eigen::Index i = 0; i < 2; ++i)
    {
        out.block(i * rows, 0, rows, m) = h(i, 0) * kernels.shaped_direct;
        out.block(i * rows, m, rows, m) = h(i, 1) * kernels.shaped_delayed;
    }
    return out;
}

DownsizedChannel downsize_and_normalize(const ComplexMatrix &oversampled, const ComplexMatrix &h)
{
    if (h.rows() != 2 || h.cols() != 2)
        throw ShapeError("downsize_and_normalize: reference channel must be 2x2");
    if (oversampled.rows() < 2 || oversampled.cols() < 2)
        throw ShapeError("downsize_and_normalize: oversampled channel must be at least 2x2");

    const numerics::SvdResult dec = numerics::svd(oversampled);
    DownsizedChannel out;
    out.receive_basis = dec.u.leftCols(2);
    out.transmit_basis = dec.v.leftCols(2);

    const ComplexMatrix reduced = out.receive_basis.adjoint() * oversampled * out.transmit_basis;
    const double reduced_norm = numerics::frobenius_norm(reduced);
    if (!(reduced_norm > 0.0))
        throw DegenerateInputError("downsize_and_normalize: downsized channel has zero norm");

    out.normalization = numerics::frobenius_norm(h) / reduced_norm;
    out.virtual_channel = reduced * out.normalization;
    return out;
}

CompositeChannel compose_oversampled(const ComplexMatrix &h, const PulseKernels &kernels)
{
    CompositeChannel out;
    out.oversampled = oversampled_channel(h, kernels);

    // H_os = blkdiag(Q, Q) * C with Q orthonormal, so the SVD of the small factor C carries over.
    const Eigen::Index q = kernels.direct_coeffs.rows();
    const Eigen::Index m = kernels.direct_coeffs.cols();
    ComplexMatrix factor(2 * q, 2 * m);
    for (Eigen::Index i = 0; i < 2; ++i)
    {
        factor.block(i * q, 0, q, m) = h(i, 0) * kernels.direct_coeffs;
        factor.block(i * q, m, q, m) = h(i, 1) * kernels.delayed_coeffs;
    }
    const numerics::SvdResult dec = numerics::svd(factor);

    const Eigen::Index rows = kernels.shaped_basis.rows();
    out.receive_basis.resize(2 * rows, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        out.receive_basis.middleRows(i * rows, rows) = kernels.shaped_basis * dec.u.block(i * q, 0, q, 2);
    out.transmit_basis = dec.v.leftCols(2);

    const ComplexMatrix reduced = dec.singular_values.head(2).cast<numerics::Complex>().asDiagonal();
    const double reduced_norm = numerics::frobenius_norm(reduced);
    if (!(reduced_norm > 0.0))
        throw DegenerateInputError("compose_oversampled: downsized channel has zero norm");
    out.normalization = numerics::frobenius_norm(h) / reduced_norm;
    out.virtual_channel = reduced * out.normalization;
    return out;
}

CompositeChannel compose_oversampled(const ComplexMatrix &h, const PulseConfig &config)
{
    return compose_oversampled(h, PulseKernels::build(config));
}

} // namespace dpst::pulse
