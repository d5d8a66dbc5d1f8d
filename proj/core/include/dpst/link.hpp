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

#ifndef DPST_LINK_HPP
#define DPST_LINK_HPP

#include "dpst/channel.hpp"
#include "dpst/numerics.hpp"
#include "dpst/pulse.hpp"
#include "dpst/random.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dpst::link
{

using numerics::ComplexMatrix;

enum class ChannelMode
{
    CorrelatedLos,
    Dpst,
    Ideal
};

inline constexpr ChannelMode kAllModes[] = {ChannelMode::CorrelatedLos, ChannelMode::Dpst, ChannelMode::Ideal};

// Short names used in file names and configuration: "los", "dpst", "ideal".
std::string_view to_string(ChannelMode mode);
std::optional<ChannelMode> parse_channel_mode(std::string_view name);

// Effective SINR values below this are reported at the floor.
inline constexpr double kEffectiveSinrFloorDb = -30.0;

struct Precoder
{
    ComplexMatrix w;           // 2x2, ||w||_F^2 = p_bs
    double power_scale = 0.0;  // rho
    double p_bs = 0.0;         // watts
};

struct NoiseModel
{
    double n0 = 0.0;                                // watts per receive antenna
    ComplexMatrix phi = ComplexMatrix::Zero(2, 2);  // interference covariance, watts
};

struct LinkResult
{
    std::vector<double> sinr_per_stream; // linear
    double effective_sinr_db = kEffectiveSinrFloorDb;
    double throughput_bps = 0.0;
    ChannelMode channel_mode = ChannelMode::CorrelatedLos;
};

struct EffectiveMetrics
{
    double effective_sinr_db;
    double throughput_bps;
};

// Closed-loop SVD precoder: leading right singular vectors of h_n scaled by
// sqrt(p_bs) * rho, with rho = 1/sqrt(2) splitting the power evenly over the two streams.
Precoder make_precoder(const ComplexMatrix &h_n, double p_bs);

// Sum over interferers of g (p_bs / 2) H H^H. Interferers spread their power evenly
// over both antennas without coordination.
ComplexMatrix interference_covariance(std::span<const channel::ChannelRealization> interferers, double p_bs);

// F = H^H (H H^H + phi + n0 I)^(-1).
ComplexMatrix mmse_filter(const ComplexMatrix &h_eq, const ComplexMatrix &phi, double n0);

// Post-MMSE SINR per stream for unit-power symbols:
// 1 / [(I + H^H R^(-1) H)^(-1)]_kk - 1 with R = phi + n0 I.
std::vector<double> per_stream_sinr(const ComplexMatrix &h_eq, const ComplexMatrix &phi, double n0);

// Shannon sum rate and the capacity-equivalent per-stream SINR, in dB with the floor applied.
EffectiveMetrics effective_sinr_and_throughput(std::span<const double> sinrs, double bandwidth_hz);

// Precode, compute SINRs and the summary metrics for a 2x2 channel as seen by the receiver.
LinkResult evaluate_link(const ComplexMatrix &channel_matrix, ChannelMode mode, const NoiseModel &noise, double p_bs,
                         double bandwidth_hz);

// Unit-power QPSK symbols, `streams` x `count`.
ComplexMatrix qpsk_block(Eigen::Index streams, Eigen::Index count, Rng &rng);

// Symbol-level path: each column of `symbols` is precoded, mapped onto the leading
// transmit directions of H_os, passed through H_os with white noise, projected onto the
// receive basis, rescaled to the virtual channel and equalized with the MMSE filter.
// Interference enters as complex Gaussian noise with covariance phi after projection.
ComplexMatrix transmit_and_estimate(const ComplexMatrix &symbols, const pulse::CompositeChannel &composite,
                                    const Precoder &precoder, const NoiseModel &noise, Rng &rng);

} // namespace dpst::link

#endif
