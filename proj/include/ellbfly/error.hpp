// Copyright 2026 The ellbfly Authors.
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

namespace ellbfly {

// Base class for every mathematical failure raised by the library.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivisionError : public MathError {
 public:
  ZeroDivisionError() : MathError("inversion of zero") {}
};

// A function was evaluated at one of its poles.
class PoleError : public MathError {
 public:
  using MathError::MathError;
};

class SingularError : public MathError {
 public:
  using MathError::MathError;
};

// Precondition violated (wrong order, wrong length, not on curve, ...).
class DomainError : public MathError {
 public:
  using MathError::MathError;
};

class SearchError : public MathError {
 public:
  using MathError::MathError;
};

// A value expected in the base field did not descend.
class DescentError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace ellbfly
