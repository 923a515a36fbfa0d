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
// The N-firm productivity-competition game. After a productivity gain of
// factor alpha, each firm either cuts hours at constant output (Cooperate)
// or holds hours and expands output (Defect). Firm payoff is market-share
// profit minus labor cost; worker payoff is wage plus monetized leisure.

#ifndef TRAGEDY_PRODUCTIVITY_HPP_
#define TRAGEDY_PRODUCTIVITY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tragedy/errors.hpp"
#include "tragedy/game.hpp"
#include "tragedy/strategy.hpp"

namespace tragedy {

/// One firm's initial state: output per period and working hours per period.
struct FirmParams {
  double output = 1.0;  // Q_i > 0
  double hours = 1.0;   // H_i > 0
};

/// Market-wide parameters shared by all firms.
struct MarketParams {
  double market_profit = 1.0;  // total profit distributed by market share
  double labor_cost = 1.0;     // cost per labor hour
  double leisure_value = 1.0;  // monetized value of one leisure hour
  double wage = 0.0;           // constant across strategies; cancels in differences
  /// One common productivity factor, or one per firm. Each entry > 1.
  std::vector<double> alpha = {2.0};
};

/// A playable productivity game: firm list plus market parameters.
/// Immutable after construction.
class ProductivityScenario {
 public:
  ProductivityScenario(std::vector<FirmParams> firms, MarketParams market)
      : firms_(std::move(firms)), market_(std::move(market)) {
    validate();
  }

  /// Bypasses parameter validation. Intended for boundary analysis such as
  /// evaluating the alpha = 1 limit where both strategies coincide.
  static ProductivityScenario unchecked(std::vector<FirmParams> firms, MarketParams market) {
    return ProductivityScenario(std::move(firms), std::move(market), unchecked_tag{});
  }

  std::size_t firm_count() const { return firms_.size(); }
  const std::vector<FirmParams>& firms() const { return firms_; }
  const FirmParams& firm(std::size_t i) const { return firms_.at(i); }
  const MarketParams& market() const { return market_; }

  bool common_alpha() const { return market_.alpha.size() == 1; }

  double alpha_for(std::size_t firm) const {
    if (firm >= firms_.size()) throw std::invalid_argument("firm index out of range");
    return common_alpha() ? market_.alpha.front() : market_.alpha[firm];
  }

  /// Copy with the alpha sequence replaced by one common factor.
  ProductivityScenario with_common_alpha(double alpha) const {
    MarketParams m = market_;
    m.alpha = {alpha};
    return ProductivityScenario(firms_, std::move(m), unchecked_tag{});
  }

 private:
  struct unchecked_tag {};

  ProductivityScenario(std::vector<FirmParams> firms, MarketParams market, unchecked_tag)
      : firms_(std::move(firms)), market_(std::move(market)) {
    if (firms_.size() < 2) throw std::invalid_argument("scenario requires at least 2 firms");
    if (market_.alpha.size() != 1 && market_.alpha.size() != firms_.size()) {
      throw std::invalid_argument("alpha must be a single factor or one per firm");
    }
  }

  void validate() const {
    if (firms_.size() < 2) throw std::invalid_argument("scenario requires at least 2 firms");
    for (std::size_t i = 0; i < firms_.size(); ++i) {
      if (!(firms_[i].output > 0.0)) {
        throw std::invalid_argument("firm " + std::to_string(i) + ": output must be positive");
      }
      if (!(firms_[i].hours > 0.0)) {
        throw std::invalid_argument("firm " + std::to_string(i) + ": hours must be positive");
      }
    }
    if (!(market_.market_profit > 0.0)) throw std::invalid_argument("market_profit must be positive");
    if (!(market_.labor_cost > 0.0)) throw std::invalid_argument("labor_cost must be positive");
    if (!(market_.leisure_value > 0.0)) throw std::invalid_argument("leisure_value must be positive");
    if (market_.alpha.size() != 1 && market_.alpha.size() != firms_.size()) {
      throw std::invalid_argument("alpha must be a single factor or one per firm");
    }
    for (double a : market_.alpha) {
      if (!(a > 1.0)) throw std::invalid_argument("every alpha must exceed 1");
    }
  }

  std::vector<FirmParams> firms_;
  MarketParams market_;
};

/// Total output of all firms except `firm`: Q_j for cooperators, alpha_j*Q_j
/// for defectors. The profile entry at `firm` is ignored.
inline double opponents_output(const ProductivityScenario& scenario, std::size_t firm,
                               const StrategyProfile& profile) {
  if (profile.size() != scenario.firm_count()) {
    throw std::invalid_argument("profile length does not match firm count");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < scenario.firm_count(); ++j) {
    if (j == firm) continue;
    total += profile[j] == Strategy::Defect ? scenario.alpha_for(j) * scenario.firm(j).output
                                            : scenario.firm(j).output;
  }
  return total;
}

/// Firm profit for one strategy against fixed opponents:
///   C: pi * Q_i / (Q_i + Q_-i) - c * H_i / alpha_i
///   D: pi * alpha_i * Q_i / (alpha_i * Q_i + Q_-i) - c * H_i
/// The profile entry at `firm` is ignored; `own` supplies the strategy.
inline double firm_utility(const ProductivityScenario& scenario, std::size_t firm,
                           Strategy own, const StrategyProfile& profile) {
  const MarketParams& m = scenario.market();
  const FirmParams& f = scenario.firm(firm);
  const double alpha = scenario.alpha_for(firm);
  const double rivals = opponents_output(scenario, firm, profile);
  const double own_output = own == Strategy::Defect ? alpha * f.output : f.output;
  const double total = own_output + rivals;
  if (!(total > 0.0)) {
    throw std::domain_error("total market output is zero; market share undefined");
  }
  const double share = own_output / total;
  const double hours = own == Strategy::Defect ? f.hours : f.hours / alpha;
  return m.market_profit * share - m.labor_cost * hours;
}

/// Worker welfare: wage plus leisure value beta*(alpha-1)*H_i/alpha when the
/// firm cooperates; bare wage when it defects.
inline double worker_utility(const ProductivityScenario& scenario, std::size_t firm,
                             Strategy own) {
  const MarketParams& m = scenario.market();
  if (own == Strategy::Defect) return m.wage;
  const double alpha = scenario.alpha_for(firm);
  const double leisure_hours = (alpha - 1.0) * scenario.firm(firm).hours / alpha;
  return m.wage + m.leisure_value * leisure_hours;
}

/// The induced firm game; payoff(i, s) is firm i's profit under profile s.
inline GameSpec build_game(const ProductivityScenario& scenario,
                           std::size_t brute_force_cap = default_brute_force_cap) {
  auto payoff = [scenario](std::size_t firm, const StrategyProfile& profile) {
    return firm_utility(scenario, firm, profile[firm], profile);
  };
  return GameSpec(scenario.firm_count(), std::move(payoff), brute_force_cap);
}

/// Per-firm market shares under a profile; they sum to one.
inline std::vector<double> market_shares(const ProductivityScenario& scenario,
                                         const StrategyProfile& profile) {
  if (profile.size() != scenario.firm_count()) {
    throw std::invalid_argument("profile length does not match firm count");
  }
  double total = 0.0;
  std::vector<double> outputs(scenario.firm_count());
  for (std::size_t i = 0; i < scenario.firm_count(); ++i) {
    outputs[i] = profile[i] == Strategy::Defect ? scenario.alpha_for(i) * scenario.firm(i).output
                                                : scenario.firm(i).output;
    total += outputs[i];
  }
  if (!(total > 0.0)) {
    throw std::domain_error("total market output is zero; market share undefined");
  }
  for (double& o : outputs) o /= total;
  return outputs;
}

/// Decomposition of the defect-vs-cooperate profit difference against fixed
/// opponents. Both components are strictly positive for alpha > 1; whether
/// defection pays is the sign of their difference.
struct DominanceGap {
  double market_share_gain = 0.0;    // pi * (share(D) - share(C))
  double labor_cost_increase = 0.0;  // c * H_i * (1 - 1/alpha_i)
  double defect_minus_coop = 0.0;    // gain - increase
};

inline DominanceGap dominance_gap(const ProductivityScenario& scenario, std::size_t firm,
                                  const StrategyProfile& profile) {
  const MarketParams& m = scenario.market();
  const FirmParams& f = scenario.firm(firm);
  const double alpha = scenario.alpha_for(firm);
  const double rivals = opponents_output(scenario, firm, profile);
  const double share_defect = alpha * f.output / (alpha * f.output + rivals);
  const double share_coop = f.output / (f.output + rivals);
  DominanceGap gap;
  gap.market_share_gain = m.market_profit * (share_defect - share_coop);
  gap.labor_cost_increase = m.labor_cost * f.hours * (1.0 - 1.0 / alpha);
  gap.defect_minus_coop = gap.market_share_gain - gap.labor_cost_increase;
  return gap;
}

struct DominanceCheck {
  bool holds = false;
  /// Minimum of defect_minus_coop over all opponent profiles.
  double worst_case_net = 0.0;
  /// Opponent profile attaining the worst case (own entry carries no
  /// information; it is set to Cooperate).
  StrategyProfile witness;
};

/// Exhaustive dominance check for one firm: defection must strictly pay
/// against every opponent profile.
inline DominanceCheck is_defection_dominant(const ProductivityScenario& scenario,
                                            std::size_t firm) {
  const std::size_t n = scenario.firm_count();
  if (firm >= n) throw std::invalid_argument("firm index out of range");
  if (n > default_brute_force_cap) {
    throw CapacityError("is_defection_dominant: " + std::to_string(n) +
                        " firms exceed the brute-force cap of " +
                        std::to_string(default_brute_force_cap));
  }

  bool first = true;
  DominanceCheck check{false, 0.0, StrategyProfile::all_cooperate(n)};
  const std::uint64_t opponent_profiles = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < opponent_profiles; ++m) {
    const std::uint64_t full = detail::expand_opponent_mask(m, firm);
    const StrategyProfile profile = StrategyProfile::from_mask(n, full);
    const double net = dominance_gap(scenario, firm, profile).defect_minus_coop;
    if (first || net < check.worst_case_net) {
      check.worst_case_net = net;
      check.witness = profile;
      first = false;
    }
  }
  check.holds = check.worst_case_net > 0.0;
  return check;
}

/// Per-actor gain from universal cooperation over universal defection:
///   firm:   c * (alpha_i - 1) * H_i / alpha_i   (labor cost savings)
///   worker: beta * (alpha_i - 1) * H_i / alpha_i (leisure gain)
struct CooperativeSurplus {
  double firm_surplus = 0.0;
  double worker_surplus = 0.0;
};

inline std::vector<CooperativeSurplus> cooperative_surplus(const ProductivityScenario& scenario) {
  const MarketParams& m = scenario.market();
  std::vector<CooperativeSurplus> out(scenario.firm_count());
  for (std::size_t i = 0; i < scenario.firm_count(); ++i) {
    const double alpha = scenario.alpha_for(i);
    const double reclaimed_hours = (alpha - 1.0) * scenario.firm(i).hours / alpha;
    out[i].firm_surplus = m.labor_cost * reclaimed_hours;
    out[i].worker_surplus = m.leisure_value * reclaimed_hours;
  }
  return out;
}

struct AlphaSweepRow {
  double alpha = 0.0;
  std::size_t firm_index = 0;
  double firm_surplus = 0.0;
  double worker_surplus = 0.0;
};

/// Cooperative surplus per firm across an ascending sequence of common
/// productivity factors. The surplus grows toward the total labor cost
/// c*H_i as alpha grows.
inline std::vector<AlphaSweepRow> alpha_sweep(const ProductivityScenario& scenario,
                                              std::span<const double> alphas) {
  if (alphas.empty()) throw std::invalid_argument("alpha sweep requires at least one factor");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 1.0)) throw std::invalid_argument("every sweep alpha must exceed 1");
    if (i > 0 && !(alphas[i] > alphas[i - 1])) {
      throw std::invalid_argument("sweep alphas must be strictly ascending");
    }
  }
  std::vector<AlphaSweepRow> rows;
  rows.reserve(alphas.size() * scenario.firm_count());
  for (double alpha : alphas) {
    const auto surplus = cooperative_surplus(scenario.with_common_alpha(alpha));
    for (std::size_t i = 0; i < surplus.size(); ++i) {
      rows.push_back({alpha, i, surplus[i].firm_surplus, surplus[i].worker_surplus});
    }
  }
  return rows;
}

/// Anonymous view of a scenario whose firms share identical parameters and a
/// common alpha. Payoffs then depend only on the cooperating-opponent count.
inline SymmetricSpec symmetric_view(const ProductivityScenario& scenario) {
  if (!scenario.common_alpha()) {
    throw std::invalid_argument("symmetric view requires a common alpha");
  }
  const FirmParams& first = scenario.firm(0);
  for (std::size_t i = 1; i < scenario.firm_count(); ++i) {
    if (scenario.firm(i).output != first.output || scenario.firm(i).hours != first.hours) {
      throw std::invalid_argument("symmetric view requires identical firms");
    }
  }
  const std::size_t n = scenario.firm_count();
  auto profile_with_cooperators = [n](std::size_t k) {
    // Player 0 is the reference firm; k of its opponents cooperate.
    std::vector<Strategy> choices(n, Strategy::Defect);
    for (std::size_t j = 1; j <= k; ++j) choices[j] = Strategy::Cooperate;
    return StrategyProfile(std::move(choices));
  };
  auto coop = [scenario, profile_with_cooperators](std::size_t k) {
    return firm_utility(scenario, 0, Strategy::Cooperate, profile_with_cooperators(k));
  };
  auto defect = [scenario, profile_with_cooperators](std::size_t k) {
    return firm_utility(scenario, 0, Strategy::Defect, profile_with_cooperators(k));
  };
  return SymmetricSpec(n, std::move(coop), std::move(defect));
}

}  // namespace tragedy

#endif  // TRAGEDY_PRODUCTIVITY_HPP_
