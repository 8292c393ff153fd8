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

#ifndef MASEC_GRID_HPP
#define MASEC_GRID_HPP

#include <vector>

namespace masec {

/// Rounding policy for a non-integer d_min / delta_s ratio.
enum class SpacingRounding {
  kExact,   ///< reject unless the ratio is an integer (default)
  kRoundUp  ///< round the index separation up, never admitting a closer pair
};

/// The discretized transmit array.
///
/// M sampling points at spacing delta_s = L/M cover a linear array of length
/// L. The points are split into N contiguous zones of b = M/N points; the
/// n-th movable antenna may occupy exactly one point of zone n, and any two
/// selected points must be at least a_min index units (d_min meters) apart.
/// Indices are 1-based throughout: point m sits at position m*L/M.
struct GridSpec {
  int points = 0;           ///< M
  int antennas = 0;         ///< N
  double array_length = 0;  ///< L, meters
  double min_distance = 0;  ///< d_min, meters
  double point_spacing = 0; ///< delta_s = L/M, meters
  int zone_size = 0;        ///< b = M/N
  int min_separation = 1;   ///< a_min = d_min/delta_s, index units, >= 1

  /// Physical position of sampling point m (1-based). The expression order
  /// (m*L)/M is fixed so that grids at M and 2M agree bit-exactly on shared
  /// points.
  double position_of(int m) const {
    return (static_cast<double>(m) * array_length) /
           static_cast<double>(points);
  }

  /// 1-based zone index of sampling point m.
  int zone_of(int m) const { return (m - 1) / zone_size + 1; }

  /// First point of zone n (1-based).
  int zone_begin(int n) const { return zone_size * (n - 1) + 1; }

  /// Last point of zone n (1-based).
  int zone_end(int n) const { return zone_size * n; }

  /// Leftmost feasible selection: a_n = max(b(n-1)+1, a_{n-1} + a_min).
  /// Whether every entry stays inside its zone decides grid feasibility.
  std::vector<int> greedy_witness() const;

  bool contains(int m) const { return m >= 1 && m <= points; }
};

/// Validates the grid parameters and derives the spacing fields.
///
/// Throws NonIntegerZoneSize if N does not divide M, NonIntegerSpacingRatio
/// if d_min/delta_s is not an integer within 1e-9 (unless rounding up was
/// requested), and InfeasibleGrid if no selection satisfies the zone and
/// separation constraints.
GridSpec build_grid(int points, int antennas, double array_length,
                    double min_distance,
                    SpacingRounding rounding = SpacingRounding::kExact);

}  // namespace masec

#endif  // MASEC_GRID_HPP
