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

#include "masec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "masec/errors.hpp"

namespace masec {

namespace {

nlohmann::json complex_to_json(const Complex& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::json complex_vector_to_json(const std::vector<Complex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& c : v) out.push_back(complex_to_json(c));
  return out;
}

std::vector<Complex> complex_vector_from_json(const nlohmann::json& j) {
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

void ChannelConfig::validate() const {
  if (wavelength <= 0.0 || pathloss_exponent <= 0.0 ||
      reference_pathloss <= 0.0 || dist_bob <= 0.0 || dist_eve <= 0.0) {
    throw Error("channel config fields must be strictly positive");
  }
  if (paths < 1) {
    throw Error("channel config requires at least one path");
  }
}

ChannelTable::ChannelTable(GridSpec grid, double wavelength,
                           std::vector<Complex> bob, std::vector<Complex> eve)
    : grid_(grid),
      wavelength_(wavelength),
      bob_(std::move(bob)),
      eve_(std::move(eve)) {
  if (static_cast<int>(bob_.size()) != grid_.points ||
      static_cast<int>(eve_.size()) != grid_.points) {
    throw Error("channel table length does not match the grid");
  }
}

PathSet sample_paths(RandomStream& rng, const ChannelConfig& cfg,
                     double dist) {
  cfg.validate();
  const int n = cfg.paths;

  PathSet p;
  p.power_ratios.resize(static_cast<std::size_t>(n));
  p.aods.resize(static_cast<std::size_t>(n));
  p.gains.resize(static_cast<std::size_t>(n));

  double total = 0.0;
  for (double& l : p.power_ratios) {
    l = rng.uniform01();
    total += l;
  }
  if (n == 1) {
    p.power_ratios[0] = 1.0;  // normalization of a single ratio is exact
  } else {
    for (double& l : p.power_ratios) l /= total;
  }

  for (double& a : p.aods) a = rng.uniform(0.0, std::numbers::pi);

  const double link_power =
      cfg.reference_pathloss * std::pow(dist, -cfg.pathloss_exponent);
  for (int i = 0; i < n; ++i) {
    p.gains[static_cast<std::size_t>(i)] = rng.complex_gaussian(
        link_power * p.power_ratios[static_cast<std::size_t>(i)]);
  }
  return p;
}

Complex field_response(const PathSet& paths, double s, double wavelength) {
  const double wavenumber = 2.0 * std::numbers::pi / wavelength;
  Complex h{0.0, 0.0};
  for (std::size_t i = 0; i < paths.gains.size(); ++i) {
    const double phase = wavenumber * s * std::cos(paths.aods[i]);
    h += paths.gains[i] * Complex{std::cos(phase), std::sin(phase)};
  }
  return h;
}

ChannelTable tabulate(const GridSpec& grid, const PathSet& bob,
                      const PathSet& eve, double wavelength) {
  std::vector<Complex> hb(static_cast<std::size_t>(grid.points));
  std::vector<Complex> he(static_cast<std::size_t>(grid.points));
  for (int m = 1; m <= grid.points; ++m) {
    const double s = grid.position_of(m);
    hb[static_cast<std::size_t>(m - 1)] = field_response(bob, s, wavelength);
    he[static_cast<std::size_t>(m - 1)] = field_response(eve, s, wavelength);
  }
  return ChannelTable(grid, wavelength, std::move(hb), std::move(he));
}

void to_json(nlohmann::json& j, const PathSet& p) {
  j = nlohmann::json{{"gains", complex_vector_to_json(p.gains)},
                     {"aods", p.aods},
                     {"power_ratios", p.power_ratios}};
}

void from_json(const nlohmann::json& j, PathSet& p) {
  p.gains = complex_vector_from_json(j.at("gains"));
  j.at("aods").get_to(p.aods);
  j.at("power_ratios").get_to(p.power_ratios);
  if (p.aods.size() != p.gains.size() ||
      p.power_ratios.size() != p.gains.size()) {
    throw Error("path set arrays must have equal length");
  }
}

void to_json(nlohmann::json& j, const ChannelTable& t) {
  j = nlohmann::json{{"schema_version", 1},
                     {"grid",
                      {{"points", t.grid().points},
                       {"antennas", t.grid().antennas},
                       {"array_length", t.grid().array_length},
                       {"min_distance", t.grid().min_distance}}},
                     {"wavelength", t.wavelength()},
                     {"bob", complex_vector_to_json(t.bob_gains())},
                     {"eve", complex_vector_to_json(t.eve_gains())}};
}

ChannelTable channel_table_from_json(const nlohmann::json& j) {
  const auto& g = j.at("grid");
  const GridSpec grid = build_grid(
      g.at("points").get<int>(), g.at("antennas").get<int>(),
      g.at("array_length").get<double>(), g.at("min_distance").get<double>());
  return ChannelTable(grid, j.at("wavelength").get<double>(),
                      complex_vector_from_json(j.at("bob")),
                      complex_vector_from_json(j.at("eve")));
}

}  // namespace masec
