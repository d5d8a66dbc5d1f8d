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

#include "dpst/channel.hpp"

#include "dpst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dpst::channel
{

void FadingParams::validate() const
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("fading: distance must be positive, got " + std::to_string(distance_m));
    if (!(nlos_correlation >= 0.0 && nlos_correlation < 1.0))
        throw DomainError("fading: NLOS correlation must lie in [0, 1), got " + std::to_string(nlos_correlation));
}

void LargeScaleParams::validate() const
{
    if (!(carrier_ghz > 0.0))
        throw DomainError("large scale: carrier frequency must be positive");
    if (!(shadowing_sigma_db >= 0.0))
        throw DomainError("large scale: shadowing sigma must be non-negative");
    if (!std::isfinite(antenna_gain_dbi))
        throw DomainError("large scale: antenna gain must be finite");
}

double k_factor(double distance_m)
{
    if (!(distance_m > 0.0))
        throw DomainError("k_factor: distance must be positive, got " + std::to_string(distance_m));
    if (distance_m < 18.0)
        return 32.0;
    return 140.10 * std::exp(-0.107 * distance_m);
}

ComplexMatrix rician_compose(double k, const ComplexMatrix &los, const ComplexMatrix &nlos)
{
    if (los.rows() != nlos.rows() || los.cols() != nlos.cols())
        throw ShapeError("rician_compose: LOS and NLOS matrices differ in shape");
    if (!(k >= 0.0))
        throw DomainError("rician_compose: K factor must be non-negative");
    const double w_los = std::sqrt(k / (k + 1.0));
    const double w_nlos = std::sqrt(1.0 / (k + 1.0));
    return w_los * los + w_nlos * nlos;
}

ComplexMatrix los_component(LosMode)
{
    return ComplexMatrix::Ones(2, 2);
}

ComplexMatrix nlos_component(double corr, Rng &rng)
{
    if (!(corr >= 0.0 && corr < 1.0))
        throw DomainError("nlos_component: correlation must lie in [0, 1)");

    // R = [[1, c], [c, 1]] has eigenvectors (1, +-1)/sqrt(2); its square root is [[a, b], [b, a]].
    const double sp = std::sqrt(1.0 + corr);
    const double sm = std::sqrt(1.0 - corr);
    ComplexMatrix root(2, 2);
    root << 0.5 * (sp + sm), 0.5 * (sp - sm), 0.5 * (sp - sm), 0.5 * (sp + sm);

    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix white(2, 2);
    for (Eigen::Index r = 0; r < 2; ++r)
        for (Eigen::Index c = 0; c < 2; ++c)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            white(r, c) = {re, im};
        }
    return root * white * root;
}

ComplexMatrix draw_fading(const FadingParams &params, Rng &rng)
{
    params.validate();
    const ComplexMatrix los = los_component(params.los_mode);
    if (params.los_mode == LosMode::FullCorrelation)
        return los;
    return rician_compose(k_factor(params.distance_m), los, nlos_component(params.nlos_correlation, rng));
}

double pathloss_db(double distance_m, const LargeScaleParams &params)
{
    const double d = std::max(distance_m, 1.0);
    const double los = 22.0 * std::log10(d) + 28.0 + 20.0 * std::log10(params.carrier_ghz);
    if (params.pathloss_model == PathlossModel::UrbanMicroLos)
        return los;
    const double nlos = 36.7 * std::log10(d) + 22.7 + 26.0 * std::log10(params.carrier_ghz);
    return std::max(los, nlos);
}

double large_scale_gain(double distance_m, const LargeScaleParams &params, Rng &rng)
{
    params.validate();
    std::normal_distribution<double> normal(0.0, 1.0);
    const double shadow_db = params.shadowing_sigma_db * normal(rng);
    return std::pow(10.0, (params.antenna_gain_dbi - pathloss_db(distance_m, params) - shadow_db) / 10.0);
}

ComplexMatrix ideal_channel(const ComplexMatrix &reference)
{
    if (reference.rows() != 2 || reference.cols() != 2)
        throw ShapeError("ideal_channel: reference must be 2x2");
    const double norm = numerics::frobenius_norm(reference);
    if (!(norm > 0.0))
        throw DegenerateInputError("ideal_channel: reference channel has zero norm");
    return ComplexMatrix::Identity(2, 2) * (norm / std::sqrt(2.0));
}

ChannelRealization draw_link(LinkKind kind, const FadingParams &fading, const LargeScaleParams &large_scale, Rng &rng)
{
    const double gain = large_scale_gain(fading.distance_m, large_scale, rng);
    return {draw_fading(fading, rng), gain, kind, fading.distance_m};
}

} // namespace dpst::channel
