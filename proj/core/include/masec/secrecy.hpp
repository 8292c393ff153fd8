// Copyright 2026 The masec Authors
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

#ifndef MASEC_SECRECY_HPP
#define MASEC_SECRECY_HPP

#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "masec/channel.hpp"
#include "masec/grid.hpp"

namespace masec {

/// Transmit power budget and receiver noise power, both linear scale.
struct SystemParams {
  double transmit_power = 0;  ///< P_t
  double noise_power = 1.0;   ///< sigma^2

  double snr() const { return transmit_power / noise_power; }
  void validate() const;
};

/// One selected sampling point per movable antenna, strictly increasing,
/// entry n inside zone n, consecutive entries at least a_min apart.
class Selection {
 public:
  Selection(const GridSpec& grid, std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int operator[](int n) const {
    return indices_[static_cast<std::size_t>(n)];
  }
  int size() const { return static_cast<int>(indices_.size()); }

 private:
  std::vector<int> indices_;
};

/// Transmit beamforming weights; the optimizer returns ||w||^2 = P_t, except
/// in the degenerate flagged case of a vanishing legitimate channel.
struct Beamformer {
  std::vector<Complex> weights;

  double squared_norm() const;
};

/// Result of the closed-form beamforming optimization.
struct RateReport {
  double rate = 0;        ///< secrecy rate, bits/s/Hz; log2(lambda_max)
  double lambda_max = 1;  ///< maximum generalized eigenvalue of the pencil
  Beamformer beamformer;
  bool degenerate_bob = false;  ///< legitimate channel was identically zero
};

/// Channel vectors of the selected points, Bob first. The tabulated gains
/// are used as stored; the single conjugation convention is fixed here and
/// applied uniformly, which leaves every |w^H h|-based quantity unchanged.
std::pair<std::vector<Complex>, std::vector<Complex>> channels_of(
    const Selection& sel, const ChannelTable& table);

/// log2(1 + |w^H h_B|^2/sigma^2) - log2(1 + |w^H h_E|^2/sigma^2); may be
/// negative. Evaluated in log1p form.
double secrecy_rate_given_w(const Beamformer& w, std::span<const Complex> h_b,
                            std::span<const Complex> h_e,
                            const SystemParams& p);

/// Full-power beamformer maximizing the generalized Rayleigh quotient
/// (sigma^2 + P_t |f^H h_B|^2) / (sigma^2 + P_t |f^H h_E|^2) over unit f.
/// Computed by reducing the pencil to the span of {h_B, h_E}.
Beamformer optimal_beamformer(std::span<const Complex> h_b,
                              std::span<const Complex> h_e,
                              const SystemParams& p);

/// Maximum secrecy rate of the given channels together with the beamformer
/// achieving it. rate == log2(lambda_max) by construction. A vanishing h_B
/// yields a zero-rate flagged report instead of an error.
RateReport max_secrecy_rate(std::span<const Complex> h_b,
                            std::span<const Complex> h_e,
                            const SystemParams& p);

/// Cross-check path: forms the dense N x N pencil
/// (sigma^2 I + P_t h_B h_B^H, sigma^2 I + P_t h_E h_E^H) and solves the
/// generalized eigenproblem with a standard dense solver. Returns the
/// maximum eigenvalue and a unit-norm eigenvector. Kept independent of the
/// 2x2 subspace reduction used by max_secrecy_rate.
std::pair<double, std::vector<Complex>> dense_pencil_oracle(
    std::span<const Complex> h_b, std::span<const Complex> h_e,
    const SystemParams& p);

void to_json(nlohmann::json& j, const Beamformer& w);
void to_json(nlohmann::json& j, const RateReport& r);

}  // namespace masec

#endif  // MASEC_SECRECY_HPP
