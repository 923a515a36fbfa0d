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
//
// Finite N-player binary-choice games: payoff evaluation, dominance tests,
// exhaustive Nash search, Pareto comparison, and best-response dynamics,
// plus an anonymous-game reduction for O(n) analysis of symmetric games.

#ifndef TRAGEDY_GAME_HPP_
#define TRAGEDY_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tragedy/errors.hpp"
#include "tragedy/strategy.hpp"

namespace tragedy {

/// Exhaustive enumeration walks 2^n profiles; 2^20 keeps worst-case
/// desk-scale runtime under seconds.
inline constexpr std::size_t default_brute_force_cap = 20;

/// A playable game: player count plus a pure payoff oracle.
/// Payoffs must be deterministic and total over every player index and
/// every one of the 2^n profiles. Immutable after construction and safe
/// to share across threads.
class GameSpec {
 public:
  using PayoffFn = std::function<double(std::size_t player, const StrategyProfile&)>;

  GameSpec(std::size_t players, PayoffFn payoff,
           std::size_t brute_force_cap = default_brute_force_cap)
      : players_(players), payoff_(std::move(payoff)), cap_(brute_force_cap) {
    if (players_ < 2) throw std::invalid_argument("GameSpec requires at least 2 players");
    if (!payoff_) throw std::invalid_argument("GameSpec requires a payoff function");
  }

  std::size_t players() const { return players_; }
  std::size_t brute_force_cap() const { return cap_; }

  double payoff(std::size_t player, const StrategyProfile& profile) const {
    if (player >= players_) throw std::invalid_argument("player index out of range");
    if (profile.size() != players_) {
      throw std::invalid_argument("profile length does not match player count");
    }
    return payoff_(player, profile);
  }

  /// Guard for operations that enumerate all 2^n profiles.
  void require_brute_force(const char* op) const {
    if (players_ > cap_) {
      throw CapacityError(std::string(op) + ": " + std::to_string(players_) +
                          " players exceed the brute-force cap of " +
                          std::to_string(cap_) +
                          "; use a symmetric game for the O(n) path");
    }
  }

 private:
  std::size_t players_;
  PayoffFn payoff_;
  std::size_t cap_;
};

/// Anonymous-game reduction: each player's payoff depends only on their own
/// strategy and the number k of cooperators among the other n-1 players.
/// Both payoff functions must be total on k in [0, n-1].
class SymmetricSpec {
 public:
  using CountPayoffFn = std::function<double(std::size_t k)>;

  SymmetricSpec(std::size_t players, CountPayoffFn cooperate, CountPayoffFn defect)
      : players_(players), coop_(std::move(cooperate)), defect_(std::move(defect)) {
    if (players_ < 2) throw std::invalid_argument("SymmetricSpec requires at least 2 players");
    if (!coop_ || !defect_) {
      throw std::invalid_argument("SymmetricSpec requires both payoff functions");
    }
  }

  /// Tabulated form: entry k of each table is the payoff with k cooperating
  /// opponents. Both tables must have length n.
  static SymmetricSpec from_tables(std::vector<double> cooperate, std::vector<double> defect) {
    if (cooperate.size() != defect.size()) {
      throw std::invalid_argument("cooperate/defect tables must have equal length");
    }
    const std::size_t n = cooperate.size();
    auto coop_fn = [table = std::move(cooperate)](std::size_t k) { return table.at(k); };
    auto defect_fn = [table = std::move(defect)](std::size_t k) { return table.at(k); };
    return SymmetricSpec(n, std::move(coop_fn), std::move(defect_fn));
  }

  std::size_t players() const { return players_; }

  double payoff_cooperate(std::size_t cooperating_opponents) const {
    check_count(cooperating_opponents);
    return coop_(cooperating_opponents);
  }

  double payoff_defect(std::size_t cooperating_opponents) const {
    check_count(cooperating_opponents);
    return defect_(cooperating_opponents);
  }

  double payoff(Strategy own, std::size_t cooperating_opponents) const {
    return own == Strategy::Cooperate ? payoff_cooperate(cooperating_opponents)
                                      : payoff_defect(cooperating_opponents);
  }

 private:
  void check_count(std::size_t k) const {
    if (k >= players_) {
      throw std::invalid_argument("cooperating-opponent count out of range");
    }
  }

  std::size_t players_;
  CountPayoffFn coop_;
  CountPayoffFn defect_;
};

/// Per-player payoffs for one profile; element i is player i's utility.
inline std::vector<double> evaluate_profile(const GameSpec& game,
                                            const StrategyProfile& profile) {
  if (profile.size() != game.players()) {
    throw std::invalid_argument("profile length does not match player count");
  }
  std::vector<double> payoffs(game.players());
  for (std::size_t i = 0; i < game.players(); ++i) {
    payoffs[i] = game.payoff(i, profile);
  }
  return payoffs;
}

namespace detail {

/// Expands a mask over the n-1 opponents of `player` into a full-game mask;
/// the player's own bit is left clear.
inline std::uint64_t expand_opponent_mask(std::uint64_t opponent_mask,
                                          std::size_t player) {
  const std::uint64_t low = opponent_mask & ((std::uint64_t{1} << player) - 1);
  const std::uint64_t high = (opponent_mask >> player) << (player + 1);
  return low | high;
}

}  // namespace detail

struct DominanceResult {
  bool holds = false;
  /// When dominance fails: a profile whose opponent entries violate it.
  /// The entry at the tested player's own index is set to the candidate
  /// strategy and carries no information.
  std::optional<StrategyProfile> counterexample;
};

/// Strict dominance of `strategy` for one player: better than the alternative
/// against every opponent profile. Ties are not dominance. `epsilon` widens
/// the required margin for callers worried about floating-point noise.
inline DominanceResult is_strictly_dominant(const GameSpec& game, std::size_t player,
                                            Strategy strategy, double epsilon = 0.0) {
  game.require_brute_force("is_strictly_dominant");
  if (player >= game.players()) throw std::invalid_argument("player index out of range");

  const std::size_t n = game.players();
  const std::uint64_t opponent_profiles = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < opponent_profiles; ++m) {
    const std::uint64_t full = detail::expand_opponent_mask(m, player);
    const StrategyProfile base = StrategyProfile::from_mask(n, full);
    const double with_candidate = game.payoff(player, base.with(player, strategy));
    const double with_other = game.payoff(player, base.with(player, other(strategy)));
    if (!(with_candidate > with_other + epsilon)) {
      return {false, base.with(player, strategy)};
    }
  }
  return {true, std::nullopt};
}

/// All pure-strategy Nash equilibria, in ascending-mask order (all-cooperate
/// mask first, all-defect mask last).
inline std::vector<StrategyProfile> find_nash_equilibria(const GameSpec& game) {
  game.require_brute_force("find_nash_equilibria");
  const std::size_t n = game.players();
  std::vector<StrategyProfile> equilibria;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const StrategyProfile profile = StrategyProfile::from_mask(n, mask);
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      const double stay = game.payoff(i, profile);
      const double deviate = game.payoff(i, profile.with(i, other(profile[i])));
      if (deviate > stay) stable = false;
    }
    if (stable) equilibria.push_back(profile);
  }
  return equilibria;
}

/// Strict Pareto domination: a improves every player's payoff over b.
inline bool pareto_dominates(const GameSpec& game, const StrategyProfile& a,
                             const StrategyProfile& b, double epsilon = 0.0) {
  const std::vector<double> pa = evaluate_profile(game, a);
  const std::vector<double> pb = evaluate_profile(game, b);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!(pa[i] > pb[i] + epsilon)) return false;
  }
  return true;
}

struct ExternalityResult {
  bool exists = false;
  /// (other player, profile) such that flipping that player's strategy in
  /// the profile changes the affected player's payoff.
  std::optional<std::pair<std::size_t, StrategyProfile>> witness;
};

/// Whether any other player's strategy flip ever changes `affected`'s payoff.
inline ExternalityResult externality_exists(const GameSpec& game, std::size_t affected) {
  game.require_brute_force("externality_exists");
  if (affected >= game.players()) throw std::invalid_argument("player index out of range");

  const std::size_t n = game.players();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == affected) continue;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if ((mask >> j) & 1u) continue;  // evaluate each flip pair once
      const StrategyProfile profile = StrategyProfile::from_mask(n, mask);
      const StrategyProfile flipped = profile.with(j, other(profile[j]));
      if (game.payoff(affected, profile) != game.payoff(affected, flipped)) {
        return {true, std::make_pair(j, profile)};
      }
    }
  }
  return {false, std::nullopt};
}

struct DynamicsResult {
  /// Visited profiles, starting with the initial one; each subsequent entry
  /// flips the lowest-index player that could strictly improve.
  std::vector<StrategyProfile> trajectory;
  /// True iff a fixed point (a Nash equilibrium) was reached within max_steps.
  bool absorbed = false;
};

namespace detail {

inline std::optional<std::size_t> first_improving_deviator(const GameSpec& game,
                                                           const StrategyProfile& profile) {
  for (std::size_t i = 0; i < game.players(); ++i) {
    const double stay = game.payoff(i, profile);
    const double deviate = game.payoff(i, profile.with(i, other(profile[i])));
    if (deviate > stay) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Sequential best-response dynamics, one flip per step, lowest-index
/// deviator first. Cycling games simply fail to absorb within max_steps.
inline DynamicsResult best_response_dynamics(const GameSpec& game,
                                             const StrategyProfile& start,
                                             std::size_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (start.size() != game.players()) {
    throw std::invalid_argument("start profile length does not match player count");
  }

  DynamicsResult result;
  result.trajectory.push_back(start);
  StrategyProfile current = start;
  for (std::size_t flips = 0;; ++flips) {
    const auto deviator = detail::first_improving_deviator(game, current);
    if (!deviator) {
      result.absorbed = true;
      break;
    }
    if (flips == max_steps) break;
    current = current.with(*deviator, other(current[*deviator]));
    result.trajectory.push_back(current);
  }
  return result;
}

/// Induces the full GameSpec from an anonymous game. The induced payoff
/// depends only on own strategy and the cooperating-opponent count, so it is
/// invariant under any permutation of the opponents.
inline GameSpec symmetric_to_game(const SymmetricSpec& sym,
                                  std::size_t brute_force_cap = default_brute_force_cap) {
  const std::size_t n = sym.players();
  auto payoff = [sym](std::size_t player, const StrategyProfile& profile) {
    return sym.payoff(profile[player], profile.cooperators_excluding(player));
  };
  return GameSpec(n, std::move(payoff), brute_force_cap);
}

/// O(n) dominance check for anonymous games; agrees with is_strictly_dominant
/// on the induced game for every player.
inline bool symmetric_dominance(const SymmetricSpec& sym, double epsilon = 0.0) {
  for (std::size_t k = 0; k < sym.players(); ++k) {
    if (!(sym.payoff_defect(k) > sym.payoff_cooperate(k) + epsilon)) return false;
  }
  return true;
}

}  // namespace tragedy

#endif  // TRAGEDY_GAME_HPP_
