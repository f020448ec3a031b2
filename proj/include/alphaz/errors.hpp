// Copyright 2026 The alphaz Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace alphaz {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Root finding was asked for the roots of the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Root finding was asked for the roots of a degree-0 polynomial.
class ConstantPolynomial : public Error {
 public:
  using Error::Error;
};

/// A point map was evaluated at (or too close to) its pole.
class MapSingularity : public Error {
 public:
  using Error::Error;
};

/// The substituted z-domain denominator collapsed to the zero polynomial.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// The stability disk is undefined at alpha = 0.
class AlphaZero : public Error {
 public:
  using Error::Error;
};

/// A method parameter lies outside its documented range.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A method that needs a parameter was given none.
class MissingParam : public Error {
 public:
  using Error::Error;
};

class NonPositiveFrequency : public Error {
 public:
  using Error::Error;
};

class NonPositiveQ : public Error {
 public:
  using Error::Error;
};

/// Continuous response requested exactly on a jw-axis pole.
class PoleOnAxis : public Error {
 public:
  using Error::Error;
};

/// Discrete response requested exactly on a unit-circle pole.
class PoleOnCircle : public Error {
 public:
  using Error::Error;
};

/// Frequency outside the open interval (0, f_nyquist).
class FrequencyOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Signal and transfer function disagree on the sample period.
class SampleRateMismatch : public Error {
 public:
  using Error::Error;
};

/// Simulation of a system with more zeros than poles (future input taps).
class NonCausalSystem : public Error {
 public:
  using Error::Error;
};

/// Constructor invariant violation (non-finite value, empty grid, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace alphaz
