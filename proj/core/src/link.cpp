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

#include "dpst/link.hpp"

#include "dpst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dpst::link
{
namespace
{

void require_square2(const ComplexMatrix &m, const char *what)
{
    if (m.rows() != 2 || m.cols() != 2)
        throw ShapeError(std::string(what) + " must be 2x2");
}

void require_hermitian(const ComplexMatrix &m, const char *what)
{
    const double scale = std::max(1.0, m.norm());
    if ((m - m.adjoint()).norm() > 1e-10 * scale)
        throw DomainError(std::string(what) + " is not Hermitian");
}

ComplexMatrix hermitian_part(const ComplexMatrix &m)
{
    return 0.5 * (m + m.adjoint());
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(m));
    const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().adjoint();
}

} // namespace

std::string_view to_string(ChannelMode mode)
{
    switch (mode)
    {
    case ChannelMode::CorrelatedLos:
        return "los";
    case ChannelMode::Dpst:
        return "dpst";
    case ChannelMode::Ideal:
        return "ideal";
    }
    return "unknown";
}

std::optional<ChannelMode> parse_channel_mode(std::string_view name)
{
    for (ChannelMode mode : kAllModes)
        if (to_string(mode) == name)
            return mode;
    return std::nullopt;
}

Precoder make_precoder(const ComplexMatrix &h_n, double p_bs)
{
    require_square2(h_n, "make_precoder: channel");
    if (!(p_bs > 0.0))
        throw DomainError("make_precoder: transmit power must be positive");
    if (!(numerics::frobenius_norm(h_n) > 0.0))
        throw DegenerateInputError("make_precoder: channel has zero norm");

    const numerics::SvdResult dec = numerics::svd(h_n);
    Precoder p;
    p.p_bs = p_bs;
    p.power_scale = 1.0 / std::sqrt(2.0);
    p.w = dec.v.leftCols(2) * (std::sqrt(p_bs) * p.power_scale);
    return p;
}

ComplexMatrix interference_covariance(std::span<const channel::ChannelRealization> interferers, double p_bs)
{
    ComplexMatrix phi = ComplexMatrix::Zero(2, 2);
    for (const auto &link : interferers)
    {
        require_square2(link.fading, "interference_covariance: interferer fading");
        phi += (link.large_scale_gain * p_bs / 2.0) * (link.fading * link.fading.adjoint());
    }
    return hermitian_part(phi);
}

ComplexMatrix mmse_filter(const ComplexMatrix &h_eq, const ComplexMatrix &phi, double n0)
{
    require_square2(h_eq, "mmse_filter: channel");
    require_square2(phi, "mmse_filter: interference covariance");
    require_hermitian(phi, "mmse_filter: interference covariance");
    if (!(n0 >= 0.0))
        throw DomainError("mmse_filter: noise power must be non-negative");

    const ComplexMatrix total =
        hermitian_part(h_eq * h_eq.adjoint() + phi + n0 * ComplexMatrix::Identity(2, 2));
    // (total^-1 H)^H = H^H total^-1 since total is Hermitian.
    return numerics::hermitian_solve(total, h_eq).adjoint();
}

std::vector<double> per_stream_sinr(const ComplexMatrix &h_eq, const ComplexMatrix &phi, double n0)
{
    require_square2(h_eq, "per_stream_sinr: channel");
    require_square2(phi, "per_stream_sinr: interference covariance");
    require_hermitian(phi, "per_stream_sinr: interference covariance");
    if (!(n0 >= 0.0))
        throw DomainError("per_stream_sinr: noise power must be non-negative");

    const Eigen::Index streams = h_eq.cols();
    if (h_eq.norm() == 0.0)
        return std::vector<double>(static_cast<std::size_t>(streams), 0.0);

    const ComplexMatrix noise_cov = hermitian_part(phi + n0 * ComplexMatrix::Identity(2, 2));
    const ComplexMatrix gram = h_eq.adjoint() * numerics::hermitian_solve(noise_cov, h_eq);
    const ComplexMatrix info = hermitian_part(ComplexMatrix::Identity(streams, streams) + gram);
    const ComplexMatrix mse = numerics::hermitian_solve(info, ComplexMatrix::Identity(streams, streams));

    std::vector<double> out(static_cast<std::size_t>(streams));
    for (Eigen::Index k = 0; k < streams; ++k)
        out[static_cast<std::size_t>(k)] = std::max(0.0, 1.0 / mse(k, k).real() - 1.0);
    return out;
}

EffectiveMetrics effective_sinr_and_throughput(std::span<const double> sinrs, double bandwidth_hz)
{
    if (sinrs.empty())
        throw ShapeError("effective_sinr_and_throughput: no streams");
    if (!(bandwidth_hz > 0.0))
        throw DomainError("effective_sinr_and_throughput: bandwidth must be positive");

    double log_sum = 0.0; // natural log of prod(1 + sinr)
    for (double s : sinrs)
    {
        if (!(s >= 0.0))
            throw DomainError("effective_sinr_and_throughput: SINR must be non-negative");
        log_sum += std::log1p(s);
    }
    const double n = static_cast<double>(sinrs.size());
    const double throughput = bandwidth_hz * log_sum / std::numbers::ln2;
    const double effective = std::expm1(log_sum / n);

    double effective_db = kEffectiveSinrFloorDb;
    if (effective > 0.0)
        effective_db = std::max(kEffectiveSinrFloorDb, 10.0 * std::log10(effective));
    return {effective_db, throughput};
}

LinkResult evaluate_link(const ComplexMatrix &channel_matrix, ChannelMode mode, const NoiseModel &noise, double p_bs,
                         double bandwidth_hz)
{
    const Precoder precoder = make_precoder(channel_matrix, p_bs);
    LinkResult r;
    r.channel_mode = mode;
    r.sinr_per_stream = per_stream_sinr(channel_matrix * precoder.w, noise.phi, noise.n0);
    const EffectiveMetrics m = effective_sinr_and_throughput(r.sinr_per_stream, bandwidth_hz);
    r.effective_sinr_db = m.effective_sinr_db;
    r.throughput_bps = m.throughput_bps;
    return r;
}

ComplexMatrix qpsk_block(Eigen::Index streams, Eigen::Index count, Rng &rng)
{
    const double a = 1.0 / std::sqrt(2.0);
    ComplexMatrix out(streams, count);
    for (Eigen::Index c = 0; c < count; ++c)
        for (Eigen::Index r = 0; r < streams; ++r)
        {
            const auto bits = rng();
            out(r, c) = {(bits & 1U) ? a : -a, (bits & 2U) ? a : -a};
        }
    return out;
}

ComplexMatrix transmit_and_estimate(const ComplexMatrix &symbols, const pulse::CompositeChannel &composite,
                                    const Precoder &precoder, const NoiseModel &noise, Rng &rng)
{
    if (symbols.rows() != 2)
        throw ShapeError("transmit_and_estimate: symbol block must have 2 rows (one per stream)");
    require_square2(precoder.w, "transmit_and_estimate: precoder");
    require_square2(composite.virtual_channel, "transmit_and_estimate: virtual channel");
    if (composite.transmit_basis.rows() != composite.oversampled.cols() || composite.transmit_basis.cols() != 2 ||
        composite.receive_basis.rows() != composite.oversampled.rows() || composite.receive_basis.cols() != 2)
        throw ShapeError("transmit_and_estimate: composite channel bases do not match H_os");

    const ComplexMatrix h_eq = composite.virtual_channel * precoder.w;
    const ComplexMatrix filter = mmse_filter(h_eq, noise.phi, noise.n0);
    const ComplexMatrix interference_root = psd_sqrt(noise.phi);

    // Sample noise in the oversampled domain so that it has power n0 after rescaling.
    const double alpha = composite.normalization;
    const double sample_sigma = std::sqrt(noise.n0 / (alpha * alpha) / 2.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto complex_normal = [&](double sigma) {
        const double re = normal(rng);
        const double im = normal(rng);
        return numerics::Complex(sigma * re, sigma * im);
    };

    const Eigen::Index rows = composite.oversampled.rows();
    ComplexMatrix estimate(2, symbols.cols());
    Eigen::VectorXcd received(rows);
    Eigen::VectorXcd interference(2);
    for (Eigen::Index k = 0; k < symbols.cols(); ++k)
    {
        const Eigen::VectorXcd launched = composite.transmit_basis * (precoder.w * symbols.col(k));
        received = composite.oversampled * launched;
        if (noise.n0 > 0.0)
            for (Eigen::Index r = 0; r < rows; ++r)
                received(r) += complex_normal(sample_sigma);

        for (Eigen::Index r = 0; r < 2; ++r)
            interference(r) = complex_normal(std::sqrt(0.5));
        const Eigen::VectorXcd projected =
            alpha * (composite.receive_basis.adjoint() * received) + interference_root * interference;
        estimate.col(k) = filter * projected;
    }
    return estimate;
}

} // namespace dpst::link
