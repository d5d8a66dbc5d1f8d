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

#ifndef DPST_PULSE_HPP
#define DPST_PULSE_HPP

#include "dpst/numerics.hpp"

namespace dpst::pulse
{

using numerics::ComplexMatrix;

// Fractional-delay pulse shaping parameters. Time is measured in symbol periods.
struct PulseConfig
{
    double tau_fraction = 0.05; // delay of the second transmit antenna, in [0, 1)
    int tx_oversampling = 4;    // R
    int rx_oversampling = 4;    // P
    int block_symbols = 10;     // M

    void validate() const; // throws ConfigError naming the offending field
};

// Normalized sinc, sin(pi x) / (pi x). Integer arguments return exactly 1 (x = 0) or 0.
double sinc(double x);

// n x m sinc interpolation matrix from m symbol-spaced samples onto n = m * R samples:
//   I(k, j) = sinc(k / R + tau - j),  k = 0..n-1, j = 0..m-1.
// tau is in input sample periods and may be any real (integral values give shifts).
// Throws ConfigError when n is not a positive multiple of m.
ComplexMatrix interp_matrix(double tau, int m, int n);

// Interpolation kernels for one PulseConfig. Independent of the channel, so one
// instance can be shared read-only by every drop.
struct PulseKernels
{
    PulseConfig config;
    ComplexMatrix tx_direct;      // (M R) x M, no offset
    ComplexMatrix tx_delayed;     // (M R) x M, offset tau
    ComplexMatrix rx;             // (M R P) x (M R)
    ComplexMatrix shaped_direct;  // rx * tx_direct
    ComplexMatrix shaped_delayed; // rx * tx_delayed
    // Thin QR of [shaped_direct | shaped_delayed]: orthonormal columns and the two coefficient blocks.
    ComplexMatrix shaped_basis;
    ComplexMatrix direct_coeffs;
    ComplexMatrix delayed_coeffs;

    static PulseKernels build(const PulseConfig &config);
};

// Oversampled tall channel H_os, its leading singular bases and the 2x2 virtual channel.
struct CompositeChannel
{
    ComplexMatrix oversampled;     // 2 M R P x 2 M
    ComplexMatrix receive_basis;   // first two left singular vectors of H_os
    ComplexMatrix transmit_basis;  // first two right singular vectors of H_os
    ComplexMatrix virtual_channel; // H_N, 2x2 with the Frobenius norm of the physical channel
    double normalization = 1.0;    // ||H||_F / ||H_R||_F
};

struct DownsizedChannel
{
    ComplexMatrix virtual_channel;
    ComplexMatrix receive_basis;
    ComplexMatrix transmit_basis;
    double normalization = 1.0;
};

// H_os for a single-tap 2x2 channel. Row block i (receive antenna i) is
//   I_R [ h(i,0) I_tx(0) | h(i,1) I_tx(tau) ].
ComplexMatrix oversampled_channel(const ComplexMatrix &h, const PulseKernels &kernels);

// Projects H_os onto its two dominant singular directions,
//   H_R = U_os(:, 0:2)^H H_os V_os(:, 0:2),
// and rescales to H_N = H_R ||h||_F / ||H_R||_F.
// Throws DegenerateInputError when ||H_R||_F = 0.
DownsizedChannel downsize_and_normalize(const ComplexMatrix &oversampled, const ComplexMatrix &h);

CompositeChannel compose_oversampled(const ComplexMatrix &h, const PulseKernels &kernels);
CompositeChannel compose_oversampled(const ComplexMatrix &h, const PulseConfig &config);

} // namespace dpst::pulse

#endif
