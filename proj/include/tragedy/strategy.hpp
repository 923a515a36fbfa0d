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

#ifndef TRAGEDY_STRATEGY_HPP_
#define TRAGEDY_STRATEGY_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tragedy {

/// The binary choice every player faces: restraint or advantage-seeking.
enum class Strategy : unsigned char { Cooperate = 0, Defect = 1 };

constexpr Strategy other(Strategy s) {
  return s == Strategy::Cooperate ? Strategy::Defect : Strategy::Cooperate;
}

constexpr char to_char(Strategy s) {
  return s == Strategy::Cooperate ? 'C' : 'D';
}

/// An assignment of Cooperate/Defect to each of n players (n >= 2).
/// Immutable after construction; mutations return a fresh profile.
class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<Strategy> choices)
      : choices_(std::move(choices)) {
    if (choices_.size() < 2) {
      throw std::invalid_argument("StrategyProfile requires at least 2 players");
    }
  }

  /// All n players assigned the same strategy.
  static StrategyProfile uniform(std::size_t n, Strategy s) {
    return StrategyProfile(std::vector<Strategy>(n, s));
  }

  static StrategyProfile all_cooperate(std::size_t n) {
    return uniform(n, Strategy::Cooperate);
  }

  static StrategyProfile all_defect(std::size_t n) {
    return uniform(n, Strategy::Defect);
  }

  /// Decodes a profile from a bitmask: bit i set means player i defects.
  /// Mask 0 is universal cooperation; mask 2^n - 1 universal defection.
  /// Ascending masks define the canonical enumeration order.
  static StrategyProfile from_mask(std::size_t n, std::uint64_t defect_mask) {
    if (n > 64) throw std::invalid_argument("from_mask supports at most 64 players");
    std::vector<Strategy> choices(n, Strategy::Cooperate);
    for (std::size_t i = 0; i < n; ++i) {
      if ((defect_mask >> i) & 1u) choices[i] = Strategy::Defect;
    }
    return StrategyProfile(std::move(choices));
  }

  /// Parses "CDD"-style text, case-insensitive.
  static StrategyProfile parse(std::string_view text) {
    std::vector<Strategy> choices;
    choices.reserve(text.size());
    for (char ch : text) {
      if (ch == 'C' || ch == 'c') {
        choices.push_back(Strategy::Cooperate);
      } else if (ch == 'D' || ch == 'd') {
        choices.push_back(Strategy::Defect);
      } else {
        throw std::invalid_argument(std::string("invalid strategy character '") + ch + "'");
      }
    }
    return StrategyProfile(std::move(choices));
  }

  std::size_t size() const { return choices_.size(); }

  Strategy at(std::size_t player) const {
    if (player >= choices_.size()) {
      throw std::invalid_argument("player index out of range");
    }
    return choices_[player];
  }

  Strategy operator[](std::size_t player) const { return choices_[player]; }

  /// Copy of this profile with one player's choice replaced.
  StrategyProfile with(std::size_t player, Strategy s) const {
    std::vector<Strategy> copy = choices_;
    if (player >= copy.size()) {
      throw std::invalid_argument("player index out of range");
    }
    copy[player] = s;
    return StrategyProfile(std::move(copy));
  }

  std::size_t cooperator_count() const {
    std::size_t k = 0;
    for (Strategy s : choices_) {
      if (s == Strategy::Cooperate) ++k;
    }
    return k;
  }

  /// Number of cooperators among the players other than `player`.
  std::size_t cooperators_excluding(std::size_t player) const {
    std::size_t k = cooperator_count();
    if (at(player) == Strategy::Cooperate) --k;
    return k;
  }

  std::string str() const {
    std::string out;
    out.reserve(choices_.size());
    for (Strategy s : choices_) out.push_back(to_char(s));
    return out;
  }

  const std::vector<Strategy>& choices() const { return choices_; }

  bool operator==(const StrategyProfile& rhs) const = default;

 private:
  std::vector<Strategy> choices_;
};

}  // namespace tragedy

#endif  // TRAGEDY_STRATEGY_HPP_
