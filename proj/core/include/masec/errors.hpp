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

#ifndef MASEC_ERRORS_HPP
#define MASEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace masec {

/// Base class of all masec exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M is not an integer multiple of N.
class NonIntegerZoneSize : public Error {
 public:
  using Error::Error;
};

/// d_min / delta_s is not an integer (and rounding was not requested).
class NonIntegerSpacingRatio : public Error {
 public:
  using Error::Error;
};

/// No selection satisfies both the zone and the minimum-separation constraint.
class InfeasibleGrid : public Error {
 public:
  using Error::Error;
};

/// A sampling-point index lies outside 1..M or outside its zone.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A path prefix cannot be extended to the last zone.
class NoFeasibleCompletion : public Error {
 public:
  using Error::Error;
};

/// The per-antenna candidate set of the sequential update is empty.
class EmptyCandidateSet : public Error {
 public:
  using Error::Error;
};

/// Zone midpoints violate the minimum separation (b < a_min).
class FpaInfeasible : public Error {
 public:
  using Error::Error;
};

/// A sweep point of an experiment configuration yields no feasible grid.
class InfeasibleSweepPoint : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace masec

#endif  // MASEC_ERRORS_HPP
