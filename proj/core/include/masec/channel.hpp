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

#ifndef MASEC_CHANNEL_HPP
#define MASEC_CHANNEL_HPP

#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "masec/grid.hpp"
#include "masec/rng.hpp"

namespace masec {

using Complex = std::complex<double>;

/// Multipath parameters of one transmitter-receiver link: per-path complex
/// response coefficient, angle of departure (radians, in [0, pi]), and the
/// power ratios, which are normalized to sum to one.
struct PathSet {
  std::vector<Complex> gains;
  std::vector<double> aods;
  std::vector<double> power_ratios;

  int count() const { return static_cast<int>(gains.size()); }
};

/// Propagation constants shared by both receivers.
struct ChannelConfig {
  double wavelength = 0.06;       ///< carrier wavelength, meters
  double pathloss_exponent = 2.8; ///< alpha
  double reference_pathloss = 0;  ///< beta at 1 m, linear scale
  double dist_bob = 100.0;        ///< meters
  double dist_eve = 100.0;        ///< meters
  int paths = 9;                  ///< transmit paths per receiver

  void validate() const;
};

/// Complex channel gain from every sampling point to Bob and to Eve.
class ChannelTable {
 public:
  ChannelTable(GridSpec grid, double wavelength, std::vector<Complex> bob,
               std::vector<Complex> eve);

  const GridSpec& grid() const { return grid_; }
  double wavelength() const { return wavelength_; }

  /// Gain from sampling point m (1-based) to Bob.
  Complex bob(int m) const { return bob_[static_cast<std::size_t>(m - 1)]; }
  /// Gain from sampling point m (1-based) to Eve.
  Complex eve(int m) const { return eve_[static_cast<std::size_t>(m - 1)]; }

  const std::vector<Complex>& bob_gains() const { return bob_; }
  const std::vector<Complex>& eve_gains() const { return eve_; }

 private:
  GridSpec grid_;
  double wavelength_;
  std::vector<Complex> bob_;
  std::vector<Complex> eve_;
};

/// Draws one multipath realization for a receiver at distance `dist`.
///
/// Power ratios are i.i.d. uniform(0,1) draws normalized to sum to one,
/// angles of departure are i.i.d. uniform on [0, pi], and each gain is a
/// zero-mean circularly symmetric complex Gaussian of variance
/// beta * dist^-alpha * l_i. Draw order is fixed (ratios, angles, gains) so
/// a seeded stream reproduces the same realization everywhere.
PathSet sample_paths(RandomStream& rng, const ChannelConfig& cfg, double dist);

/// Field response of a linear array at position s (meters from the array
/// reference point): sum_i gamma_i * exp(j * (2*pi/lambda) * s * cos(aod_i)).
Complex field_response(const PathSet& paths, double s, double wavelength);

/// Evaluates the field response of both receivers at every sampling point.
ChannelTable tabulate(const GridSpec& grid, const PathSet& bob,
                      const PathSet& eve, double wavelength);

void to_json(nlohmann::json& j, const PathSet& p);
void from_json(const nlohmann::json& j, PathSet& p);
void to_json(nlohmann::json& j, const ChannelTable& t);
ChannelTable channel_table_from_json(const nlohmann::json& j);

}  // namespace masec

#endif  // MASEC_CHANNEL_HPP
