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

#ifndef DPST_CHANNEL_HPP
#define DPST_CHANNEL_HPP

#include "dpst/numerics.hpp"
#include "dpst/random.hpp"

namespace dpst::channel
{

using numerics::ComplexMatrix;

// LOS treatment of a link.
//  RankOneLos      - Rician mixture of the rank-one LOS matrix and correlated NLOS scatter,
//                    with the distance dependent K factor.
//  FullCorrelation - single tap fully correlated LOS channel (K -> infinity): the link is
//                    the rank-one LOS matrix itself.
enum class LosMode
{
    RankOneLos,
    FullCorrelation
};

enum class LinkKind
{
    Serving,
    Interferer
};

enum class PathlossModel
{
    UrbanMicroLos,
    UrbanMicroNlos
};

struct FadingParams
{
    double distance_m = 10.0;
    double nlos_correlation = 0.5; // Kronecker coefficient, same at both ends
    LosMode los_mode = LosMode::RankOneLos;

    void validate() const;
};

struct LargeScaleParams
{
    double carrier_ghz = 2.0;
    double shadowing_sigma_db = 3.0;
    double antenna_gain_dbi = 5.0;
    PathlossModel pathloss_model = PathlossModel::UrbanMicroLos;

    void validate() const;
};

struct ChannelRealization
{
    ComplexMatrix fading;    // 2x2, dimensionless
    double large_scale_gain; // linear power gain
    LinkKind link_kind;
    double distance_m;
};

// Rician K factor (linear) versus UE-BS distance in meters:
// 32 below 18 m, 140.10 * exp(-0.107 d) otherwise. Throws DomainError for d <= 0.
double k_factor(double distance_m);

// sqrt(K/(K+1)) * los + sqrt(1/(K+1)) * nlos.
ComplexMatrix rician_compose(double k, const ComplexMatrix &los, const ComplexMatrix &nlos);

// 2x2 all-ones matrix for either mode: unit-magnitude entries, rank one.
ComplexMatrix los_component(LosMode mode);

// Kronecker-correlated Rayleigh matrix R^(1/2) Hw R^(1/2), R = [[1, corr], [corr, 1]],
// Hw with i.i.d. CN(0, 1) entries.
ComplexMatrix nlos_component(double corr, Rng &rng);

// Small-scale fading for one link according to params.los_mode.
ComplexMatrix draw_fading(const FadingParams &params, Rng &rng);

// Urban micro path loss in dB; distance clamped to >= 1 m.
//  LOS:  22.0 log10(d) + 28.0 + 20 log10(f_GHz)
//  NLOS: max(LOS, 36.7 log10(d) + 22.7 + 26 log10(f_GHz))
double pathloss_db(double distance_m, const LargeScaleParams &params);

// 10^((G_ant - PL(d) - X)/10) with X ~ N(0, sigma^2) in dB. Always consumes one
// normal draw so the random stream layout does not depend on sigma.
double large_scale_gain(double distance_m, const LargeScaleParams &params, Rng &rng);

// Scaled 2x2 identity with the Frobenius norm of `reference` (condition number 1).
// Throws DegenerateInputError for a zero-norm reference.
ComplexMatrix ideal_channel(const ComplexMatrix &reference);

// Fading plus large-scale gain for one link.
ChannelRealization draw_link(LinkKind kind, const FadingParams &fading, const LargeScaleParams &large_scale, Rng &rng);

} // namespace dpst::channel

#endif
