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

#include "masec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "masec/errors.hpp"

namespace masec {

std::vector<int> GridSpec::greedy_witness() const {
  std::vector<int> a(static_cast<std::size_t>(antennas));
  int prev = -min_separation;  // so the first antenna lands on zone_begin(1)
  for (int n = 1; n <= antennas; ++n) {
    const int candidate = std::max(zone_begin(n), prev + min_separation);
    a[static_cast<std::size_t>(n - 1)] = candidate;
    prev = candidate;
  }
  return a;
}

GridSpec build_grid(int points, int antennas, double array_length,
                    double min_distance, SpacingRounding rounding) {
  if (points <= 0 || antennas <= 0) {
    throw InfeasibleGrid("grid requires positive point and antenna counts");
  }
  if (array_length <= 0.0) {
    throw InfeasibleGrid("grid requires a positive array length");
  }
  if (min_distance < 0.0) {
    throw InfeasibleGrid("grid requires a nonnegative minimum distance");
  }
  if (points % antennas != 0) {
    throw NonIntegerZoneSize("zone size M/N = " + std::to_string(points) +
                             "/" + std::to_string(antennas) +
                             " is not an integer");
  }

  GridSpec g;
  g.points = points;
  g.antennas = antennas;
  g.array_length = array_length;
  g.min_distance = min_distance;
  g.point_spacing = array_length / static_cast<double>(points);
  g.zone_size = points / antennas;

  const double ratio = min_distance / g.point_spacing;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, std::abs(ratio))) {
    g.min_separation = static_cast<int>(nearest);
  } else if (rounding == SpacingRounding::kRoundUp) {
    g.min_separation = static_cast<int>(std::ceil(ratio));
  } else {
    throw NonIntegerSpacingRatio(
        "d_min/delta_s = " + std::to_string(ratio) + " is not an integer");
  }
  g.min_separation = std::max(1, g.min_separation);

  const std::vector<int> witness = g.greedy_witness();
  for (int n = 1; n <= antennas; ++n) {
    if (witness[static_cast<std::size_t>(n - 1)] > g.zone_end(n)) {
      throw InfeasibleGrid(
          "no feasible selection: leftmost placement needs point " +
          std::to_string(witness[static_cast<std::size_t>(n - 1)]) +
          " for antenna " + std::to_string(n) + " but its zone ends at " +
          std::to_string(g.zone_end(n)));
    }
  }
  return g;
}

}  // namespace masec
