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
// Five-condition diagnostic for structural tragedies:
//   C1 multiple independent decision-makers, C2 externalities,
//   C3 strict dominance of defection, C4 Pareto-dominated defection
//   equilibrium, C5 declared enforcement barriers.
// A game is a structural tragedy iff all five hold; universal defection is
// then the unique Nash equilibrium and universal cooperation Pareto-
// dominates it.

#ifndef TRAGEDY_VERIFY_HPP_
#define TRAGEDY_VERIFY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tragedy/game.hpp"
#include "tragedy/strategy.hpp"

namespace tragedy {

/// Structural barriers that prevent coordination from being enforced.
enum class Barrier : unsigned char {
  Anarchy,
  VerificationImpossibility,
  MonitoringInfeasibility,
  CommitmentProblems,
};

inline std::string to_string(Barrier b) {
  switch (b) {
    case Barrier::Anarchy: return "Anarchy";
    case Barrier::VerificationImpossibility: return "VerificationImpossibility";
    case Barrier::MonitoringInfeasibility: return "MonitoringInfeasibility";
    case Barrier::CommitmentProblems: return "CommitmentProblems";
  }
  throw std::invalid_argument("unknown barrier");
}

/// Accepts full names or the short forms anarchy / verification /
/// monitoring / commitment, case-insensitive.
inline Barrier parse_barrier(std::string_view token) {
  std::string lower;
  lower.reserve(token.size());
  for (char ch : token) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (lower == "anarchy") return Barrier::Anarchy;
  if (lower == "verification" || lower == "verificationimpossibility") {
    return Barrier::VerificationImpossibility;
  }
  if (lower == "monitoring" || lower == "monitoringinfeasibility") {
    return Barrier::MonitoringInfeasibility;
  }
  if (lower == "commitment" || lower == "commitmentproblems") {
    return Barrier::CommitmentProblems;
  }
  throw std::invalid_argument("invalid barrier token \"" + std::string(token) + "\"");
}

/// Enforcement difficulty is declared metadata, never inferred from payoffs:
/// the barriers live outside the payoff structure. C5 counts as met iff the
/// barrier set is non-empty. The declaration also carries the one C1 clause
/// that payoffs cannot express: whether choices are made in a decentralized
/// architecture (a central authority with binding power removes C1 even
/// when n >= 2).
struct C5Declaration {
  std::set<Barrier> barriers;
  std::string notes;
  bool decentralized_architecture = true;
};

enum class Condition : unsigned char { C1, C2, C3, C4, C5 };

inline std::string to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
    case Condition::C5: return "C5";
  }
  throw std::invalid_argument("unknown condition");
}

inline std::string condition_title(Condition c) {
  switch (c) {
    case Condition::C1: return "N-player structure";
    case Condition::C2: return "Binary choice with externalities";
    case Condition::C3: return "Dominance of defection";
    case Condition::C4: return "Pareto-inefficient equilibrium";
    case Condition::C5: return "Enforcement difficulty";
  }
  throw std::invalid_argument("unknown condition");
}

/// C1-C4 are computed from the game (Satisfied/Violated); C5 is Declared.
enum class ConditionStatus : unsigned char { Satisfied, Violated, Declared };

inline std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Satisfied: return "Satisfied";
    case ConditionStatus::Violated: return "Violated";
    case ConditionStatus::Declared: return "Declared";
  }
  throw std::invalid_argument("unknown condition status");
}

struct ConditionReport {
  Condition condition = Condition::C1;
  ConditionStatus status = ConditionStatus::Violated;
  /// Whether the condition counts toward a tragedy: Satisfied, or Declared
  /// with a non-empty barrier set.
  bool met = false;
  std::string detail;
  std::optional<std::size_t> witness_player;
  std::optional<StrategyProfile> witness_profile;
};

struct TragedyVerdict {
  std::array<ConditionReport, 5> reports;
  bool is_structural_tragedy = false;
  /// Pure Nash equilibria in canonical enumeration order. Exhaustive for
  /// games under the brute-force cap; for larger symmetric games it holds
  /// one representative per anonymous equilibrium class and
  /// nash_set_exhaustive is false unless the classes are singletons.
  std::vector<StrategyProfile> nash_set;
  bool nash_set_exhaustive = true;
  std::vector<bool> per_player_externality;
  /// The strong reading of C2 (every player is affected); informational,
  /// not required for the verdict.
  bool externalities_affect_all_players = false;
  /// Whether universal cooperation strictly Pareto-dominates universal
  /// defection (the C4 result).
  bool pareto_dominated_equilibrium = false;
  /// Whether best-response dynamics started from universal cooperation
  /// absorb at universal defection.
  bool dynamics_absorbed_at_all_defect = false;

  const ConditionReport& report(Condition c) const {
    return reports[static_cast<std::size_t>(c)];
  }
};

namespace detail {

inline std::string describe_barriers(const C5Declaration& decl) {
  std::ostringstream out;
  if (decl.barriers.empty()) {
    out << "no barriers declared";
  } else {
    out << "barriers:";
    for (Barrier b : decl.barriers) out << ' ' << to_string(b);
  }
  if (!decl.notes.empty()) out << "; " << decl.notes;
  return out.str();
}

inline ConditionReport c1_report(std::size_t players, const C5Declaration& decl) {
  ConditionReport r;
  r.condition = Condition::C1;
  const bool met = players >= 2 && decl.decentralized_architecture;
  r.status = met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
  r.met = met;
  std::ostringstream detail;
  detail << players << " independent players; "
         << (decl.decentralized_architecture ? "decentralized architecture"
                                             : "centralized authority declared");
  r.detail = detail.str();
  return r;
}

inline ConditionReport c5_report(const C5Declaration& decl) {
  ConditionReport r;
  r.condition = Condition::C5;
  r.status = ConditionStatus::Declared;
  r.met = !decl.barriers.empty();
  r.detail = describe_barriers(decl);
  return r;
}

inline void finalize_verdict(TragedyVerdict& verdict) {
  verdict.is_structural_tragedy = true;
  for (const ConditionReport& r : verdict.reports) {
    if (!r.met) verdict.is_structural_tragedy = false;
  }
  verdict.pareto_dominated_equilibrium = verdict.report(Condition::C4).met;
}

}  // namespace detail

/// Runs the full diagnostic against an arbitrary game (exhaustive mode;
/// requires n within the brute-force cap).
inline TragedyVerdict verify_conditions(const GameSpec& game, const C5Declaration& decl) {
  game.require_brute_force("verify_conditions");
  const std::size_t n = game.players();
  TragedyVerdict verdict;

  verdict.reports[0] = detail::c1_report(n, decl);

  // C2: at least one player's payoff depends on another player's strategy.
  verdict.per_player_externality.resize(n);
  std::optional<std::pair<std::size_t, std::pair<std::size_t, StrategyProfile>>> first_witness;
  std::size_t affected_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const ExternalityResult ext = externality_exists(game, i);
    verdict.per_player_externality[i] = ext.exists;
    if (ext.exists) {
      ++affected_count;
      if (!first_witness) first_witness = {i, *ext.witness};
    }
  }
  verdict.externalities_affect_all_players = affected_count == n;
  {
    ConditionReport r;
    r.condition = Condition::C2;
    r.met = affected_count > 0;
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    std::ostringstream detail;
    detail << affected_count << " of " << n << " players affected by others' choices";
    if (verdict.externalities_affect_all_players) detail << " (all players affected)";
    r.detail = detail.str();
    if (first_witness) {
      r.witness_player = first_witness->second.first;
      r.witness_profile = first_witness->second.second;
    }
    verdict.reports[1] = r;
  }

  // C3: defection strictly dominant for every player.
  {
    ConditionReport r;
    r.condition = Condition::C3;
    r.met = true;
    for (std::size_t i = 0; i < n; ++i) {
      const DominanceResult dom = is_strictly_dominant(game, i, Strategy::Defect);
      if (!dom.holds) {
        r.met = false;
        r.witness_player = i;
        r.witness_profile = dom.counterexample;
        break;
      }
    }
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    r.detail = r.met ? "defection strictly dominant for every player"
                     : "player " + std::to_string(*r.witness_player) +
                           " lacks strict incentive to defect at profile " +
                           r.witness_profile->str();
    verdict.reports[2] = r;
  }

  // C4: universal cooperation strictly Pareto-dominates universal defection.
  {
    const StrategyProfile all_c = StrategyProfile::all_cooperate(n);
    const StrategyProfile all_d = StrategyProfile::all_defect(n);
    ConditionReport r;
    r.condition = Condition::C4;
    r.met = pareto_dominates(game, all_c, all_d);
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    if (r.met) {
      r.detail = "universal cooperation strictly Pareto-dominates universal defection";
    } else {
      const auto coop = evaluate_profile(game, all_c);
      const auto defect = evaluate_profile(game, all_d);
      std::size_t player = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(coop[i] > defect[i])) { player = i; break; }
      }
      r.witness_player = player;
      r.witness_profile = all_d;
      r.detail = "player " + std::to_string(player) +
                 " does not strictly prefer universal cooperation";
    }
    verdict.reports[3] = r;
  }

  verdict.reports[4] = detail::c5_report(decl);

  verdict.nash_set = find_nash_equilibria(game);
  verdict.nash_set_exhaustive = true;

  const DynamicsResult dyn =
      best_response_dynamics(game, StrategyProfile::all_cooperate(n), 4 * n + 8);
  verdict.dynamics_absorbed_at_all_defect =
      dyn.absorbed && dyn.trajectory.back() == StrategyProfile::all_defect(n);

  detail::finalize_verdict(verdict);
  return verdict;
}

namespace detail {

/// Representative profile of the anonymous class with `cooperators`
/// cooperating players: the first c players cooperate.
inline StrategyProfile class_representative(std::size_t n, std::size_t cooperators) {
  std::vector<Strategy> choices(n, Strategy::Defect);
  for (std::size_t i = 0; i < cooperators; ++i) choices[i] = Strategy::Cooperate;
  return StrategyProfile(std::move(choices));
}

/// Best-response dynamics on an anonymous game without materializing the
/// induced GameSpec; cooperating counts make each step O(n).
inline bool symmetric_dynamics_absorbs_at_all_defect(const SymmetricSpec& sym,
                                                     std::size_t max_steps) {
  const std::size_t n = sym.players();
  std::vector<Strategy> current(n, Strategy::Cooperate);
  std::size_t cooperators = n;
  for (std::size_t flips = 0;; ++flips) {
    // A cooperator improves by defecting iff defect(c-1) > coop(c-1); a
    // defector improves by cooperating iff coop(c) > defect(c).
    const bool coop_improves =
        cooperators > 0 && sym.payoff_defect(cooperators - 1) > sym.payoff_cooperate(cooperators - 1);
    const bool defect_improves =
        cooperators < n && sym.payoff_cooperate(cooperators) > sym.payoff_defect(cooperators);
    std::optional<std::size_t> deviator;
    for (std::size_t i = 0; i < n && !deviator; ++i) {
      if (current[i] == Strategy::Cooperate ? coop_improves : defect_improves) deviator = i;
    }
    if (!deviator) return cooperators == 0;
    if (flips == max_steps) return false;
    if (current[*deviator] == Strategy::Cooperate) {
      current[*deviator] = Strategy::Defect;
      --cooperators;
    } else {
      current[*deviator] = Strategy::Cooperate;
      ++cooperators;
    }
  }
}

}  // namespace detail

/// Diagnostic over the anonymous reduction: every check runs in O(n) or
/// O(n^2), so games far beyond the brute-force cap stay tractable.
inline TragedyVerdict verify_conditions(const SymmetricSpec& sym, const C5Declaration& decl) {
  const std::size_t n = sym.players();
  TragedyVerdict verdict;

  verdict.reports[0] = detail::c1_report(n, decl);

  // C2: one opponent's flip moves a player's cooperating count by one, so an
  // externality exists iff either payoff function varies in k.
  bool externality = false;
  for (std::size_t k = 0; k + 1 < n && !externality; ++k) {
    if (sym.payoff_cooperate(k) != sym.payoff_cooperate(k + 1) ||
        sym.payoff_defect(k) != sym.payoff_defect(k + 1)) {
      externality = true;
    }
  }
  verdict.per_player_externality.assign(n, externality);
  verdict.externalities_affect_all_players = externality;
  {
    ConditionReport r;
    r.condition = Condition::C2;
    r.met = externality;
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    r.detail = externality
                   ? "payoffs vary with the cooperating-opponent count (all players affected)"
                   : "payoffs are independent of opponents' choices";
    verdict.reports[1] = r;
  }

  // C3 via the O(n) dominance form.
  {
    ConditionReport r;
    r.condition = Condition::C3;
    r.met = symmetric_dominance(sym);
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    if (r.met) {
      r.detail = "defection strictly dominant for every player";
    } else {
      std::size_t bad_k = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(sym.payoff_defect(k) > sym.payoff_cooperate(k))) { bad_k = k; break; }
      }
      r.detail = "defection does not strictly beat cooperation against " +
                 std::to_string(bad_k) + " cooperating opponents";
      r.witness_player = 0;
      if (n <= 64) {
        // Witness: player 0 cooperates while bad_k opponents cooperate.
        r.witness_profile = detail::class_representative(n, bad_k + 1);
      }
    }
    verdict.reports[2] = r;
  }

  // C4: all-cooperate vs all-defect reduces to two table lookups.
  {
    ConditionReport r;
    r.condition = Condition::C4;
    r.met = sym.payoff_cooperate(n - 1) > sym.payoff_defect(0);
    r.status = r.met ? ConditionStatus::Satisfied : ConditionStatus::Violated;
    r.detail = r.met ? "universal cooperation strictly Pareto-dominates universal defection"
                     : "universal cooperation does not strictly improve on universal defection";
    verdict.reports[3] = r;
  }

  verdict.reports[4] = detail::c5_report(decl);

  // Nash classes by cooperator count: a profile with c cooperators is an
  // equilibrium iff no cooperator gains by defecting and no defector gains
  // by cooperating.
  std::vector<std::size_t> nash_counts;
  for (std::size_t c = 0; c <= n; ++c) {
    const bool coop_stable = c == 0 || !(sym.payoff_defect(c - 1) > sym.payoff_cooperate(c - 1));
    const bool defect_stable = c == n || !(sym.payoff_cooperate(c) > sym.payoff_defect(c));
    if (coop_stable && defect_stable) nash_counts.push_back(c);
  }
  // Representatives put the cooperators first, so descending cooperator
  // count matches the canonical ascending-mask enumeration order.
  verdict.nash_set_exhaustive = true;
  for (auto it = nash_counts.rbegin(); it != nash_counts.rend(); ++it) {
    verdict.nash_set.push_back(detail::class_representative(n, *it));
    if (*it != 0 && *it != n) verdict.nash_set_exhaustive = false;
  }

  verdict.dynamics_absorbed_at_all_defect =
      detail::symmetric_dynamics_absorbs_at_all_defect(sym, 4 * n + 8);

  detail::finalize_verdict(verdict);
  return verdict;
}

/// One removed-condition construction and its verdict.
struct NecessityEntry {
  Condition removed = Condition::C1;
  std::string name;
  std::string description;
  GameSpec game;
  C5Declaration declaration;
  TragedyVerdict verdict;
};

namespace detail {

inline GameSpec classic_pd() {
  // T=5, R=3, P=1, S=0.
  return symmetric_to_game(SymmetricSpec::from_tables({0.0, 3.0}, {1.0, 5.0}));
}

}  // namespace detail

/// The five removed-condition constructions: each removes one condition and
/// verifies the tragedy structure breaks. Removing C2 (externalities) while
/// keeping strict dominance forces universal defection to beat universal
/// cooperation pointwise, so that entry necessarily loses C4 as well; the
/// other four entries fail only their removed condition.
inline std::vector<NecessityEntry> necessity_suite() {
  std::vector<NecessityEntry> entries;

  {
    // Removing C1: a central authority binds every player's choice, so the
    // decentralized-architecture clause fails even though n >= 2.
    C5Declaration decl;
    decl.barriers = {Barrier::Anarchy};
    decl.decentralized_architecture = false;
    decl.notes = "single decision-maker controls all choices";
    GameSpec game = detail::classic_pd();
    TragedyVerdict verdict = verify_conditions(game, decl);
    entries.push_back({Condition::C1, "central authority",
                       "classic dilemma payoffs under a single binding decision-maker",
                       std::move(game), decl, std::move(verdict)});
  }

  {
    // Removing C2: each player's payoff depends only on their own choice.
    C5Declaration decl;
    decl.barriers = {Barrier::Anarchy};
    GameSpec game(2, [](std::size_t player, const StrategyProfile& s) {
      return s[player] == Strategy::Defect ? 1.0 : 0.0;
    });
    TragedyVerdict verdict = verify_conditions(game, decl);
    entries.push_back({Condition::C2, "separable payoffs",
                       "no externalities; players optimize independently",
                       std::move(game), decl, std::move(verdict)});
  }

  {
    // Removing C3: a coordination game where cooperation is the best reply
    // to cooperation; both uniform profiles are equilibria.
    C5Declaration decl;
    decl.barriers = {Barrier::Anarchy};
    GameSpec game = symmetric_to_game(SymmetricSpec::from_tables({0.0, 2.0}, {1.0, 0.0}));
    TragedyVerdict verdict = verify_conditions(game, decl);
    entries.push_back({Condition::C3, "coordination game",
                       "defection is not dominant; cooperation is self-enforcing",
                       std::move(game), decl, std::move(verdict)});
  }

  {
    // Removing C4: defection stays dominant but mutual defection beats
    // mutual cooperation, so the equilibrium is efficient.
    C5Declaration decl;
    decl.barriers = {Barrier::Anarchy};
    GameSpec game = symmetric_to_game(SymmetricSpec::from_tables({0.0, 1.0}, {1.5, 2.0}));
    TragedyVerdict verdict = verify_conditions(game, decl);
    entries.push_back({Condition::C4, "efficient defection",
                       "universal defection is not Pareto-dominated",
                       std::move(game), decl, std::move(verdict)});
  }

  {
    // Removing C5: same dilemma, but no structural barrier is declared.
    C5Declaration decl;
    GameSpec game = detail::classic_pd();
    TragedyVerdict verdict = verify_conditions(game, decl);
    entries.push_back({Condition::C5, "no declared barriers",
                       "enforceable coordination; the declaration lists no barriers",
                       std::move(game), decl, std::move(verdict)});
  }

  return entries;
}

}  // namespace tragedy

#endif  // TRAGEDY_VERIFY_HPP_
