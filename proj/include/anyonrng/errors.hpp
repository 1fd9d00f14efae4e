// Copyright 2026 The anyonrng Authors
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

namespace anyonrng {

/// Raised when a gadget precondition on the physical register is violated,
/// e.g. the CNOT ancilla pair is not in the vacuum channel.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

/// Observed data that no valid quantum device can produce (L̂ > 4, counts
/// that do not add up, ...).
class DataIntegrityError : public std::runtime_error {
 public:
  explicit DataIntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The numerical solver failed to produce a usable answer.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numerical invariant broken (degenerate norm and similar).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace anyonrng
