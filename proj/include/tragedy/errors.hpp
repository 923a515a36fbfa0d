// Copyright 2026 The Tragedy Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRAGEDY_ERRORS_HPP_
#define TRAGEDY_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace tragedy {

/// Thrown when an exhaustive operation would enumerate more profiles than
/// the game's brute-force cap allows.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a file cannot be read, written, or parsed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a name lookup fails; carries the available names.
class LookupError : public std::runtime_error {
 public:
  LookupError(const std::string& what, std::vector<std::string> available)
      : std::runtime_error(what), available_(std::move(available)) {}

  const std::vector<std::string>& available() const { return available_; }

 private:
  std::vector<std::string> available_;
};

/// Thrown when a loaded dataset violates its schema or invariants.
/// Collects every violation rather than stopping at the first.
class DatasetError : public std::runtime_error {
 public:
  explicit DatasetError(std::vector<std::string> violations)
      : std::runtime_error(Join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string Join(const std::vector<std::string>& violations) {
    std::string out = "dataset invalid:";
    for (const auto& v : violations) {
      out += "\n  - " + v;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace tragedy

#endif  // TRAGEDY_ERRORS_HPP_
