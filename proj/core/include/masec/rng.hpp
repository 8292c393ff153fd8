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

#ifndef MASEC_RNG_HPP
#define MASEC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace masec {

/// Deterministic random stream.
///
/// The engine (mt19937_64) is fully specified by the C++ standard and the
/// variate transforms below are hand-rolled from raw 64-bit draws, so a given
/// seed produces the same sequence on every platform and compiler. One master
/// seed drives an experiment; the stream of trial t is seeded with
/// master_seed + t, which makes trials independent of execution order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial) {
    return RandomStream(master_seed + trial);
  }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes exactly two raw draws.
  double normal() {
    // (r + 0.5) * 2^-53 lies strictly inside (0, 1), keeping the log finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Circularly symmetric complex Gaussian with total variance `variance`
  /// (independent real and imaginary parts, each carrying half of it).
  std::complex<double> complex_gaussian(double variance) {
    const double s = std::sqrt(variance * 0.5);
    const double re = s * normal();
    const double im = s * normal();
    return {re, im};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace masec

#endif  // MASEC_RNG_HPP
