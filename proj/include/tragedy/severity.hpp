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
// Severity model: ordinal condition intensities, the geometric-mean Tragedy
// Index with its magnitude classes, and payoff-based severity measures
// (normalized rationality gap, price of anarchy, temptation ratio).

#ifndef TRAGEDY_SEVERITY_HPP_
#define TRAGEDY_SEVERITY_HPP_

#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tragedy/game.hpp"

namespace tragedy {

/// Ordinal intensity of one condition. The numeric values are fixed
/// exponential constants: Absent=0, Low=10, Medium=100, High=1000,
/// Extreme=10000.
enum class IntensityLevel : unsigned char { Absent, Low, Medium, High, Extreme };

inline constexpr std::array<IntensityLevel, 5> all_intensity_levels = {
    IntensityLevel::Absent, IntensityLevel::Low, IntensityLevel::Medium,
    IntensityLevel::High, IntensityLevel::Extreme};

constexpr double intensity_value(IntensityLevel level) {
  switch (level) {
    case IntensityLevel::Absent: return 0.0;
    case IntensityLevel::Low: return 10.0;
    case IntensityLevel::Medium: return 100.0;
    case IntensityLevel::High: return 1000.0;
    case IntensityLevel::Extreme: return 10000.0;
  }
  throw std::invalid_argument("unknown intensity level");
}

/// Exact log10 of the intensity value; 0 for Absent (the radar convention).
constexpr int intensity_log10(IntensityLevel level) {
  switch (level) {
    case IntensityLevel::Absent: return 0;
    case IntensityLevel::Low: return 1;
    case IntensityLevel::Medium: return 2;
    case IntensityLevel::High: return 3;
    case IntensityLevel::Extreme: return 4;
  }
  throw std::invalid_argument("unknown intensity level");
}

inline std::string to_string(IntensityLevel level) {
  switch (level) {
    case IntensityLevel::Absent: return "Absent";
    case IntensityLevel::Low: return "Low";
    case IntensityLevel::Medium: return "Medium";
    case IntensityLevel::High: return "High";
    case IntensityLevel::Extreme: return "Extreme";
  }
  throw std::invalid_argument("unknown intensity level");
}

constexpr char to_letter(IntensityLevel level) {
  switch (level) {
    case IntensityLevel::Absent: return 'A';
    case IntensityLevel::Low: return 'L';
    case IntensityLevel::Medium: return 'M';
    case IntensityLevel::High: return 'H';
    case IntensityLevel::Extreme: return 'E';
  }
  throw std::invalid_argument("unknown intensity level");
}

/// Parses an intensity token: single letters (A/L/M/H/E) or full words,
/// case-insensitive, surrounding whitespace ignored. "Solved" is accepted
/// as a synonym for Absent.
inline IntensityLevel parse_intensity(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(token[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(token[end - 1]))) --end;
  std::string lower;
  lower.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(token[i]))));
  }
  if (lower == "a" || lower == "absent" || lower == "solved") return IntensityLevel::Absent;
  if (lower == "l" || lower == "low") return IntensityLevel::Low;
  if (lower == "m" || lower == "medium") return IntensityLevel::Medium;
  if (lower == "h" || lower == "high") return IntensityLevel::High;
  if (lower == "e" || lower == "extreme") return IntensityLevel::Extreme;
  throw std::invalid_argument("invalid intensity token \"" + std::string(token) + "\"");
}

/// Five intensities ordered C1..C5.
using ConditionProfile = std::array<IntensityLevel, 5>;

inline ConditionProfile parse_condition_profile(const std::array<std::string, 5>& tokens) {
  ConditionProfile profile;
  for (std::size_t i = 0; i < 5; ++i) profile[i] = parse_intensity(tokens[i]);
  return profile;
}

enum class Magnitude : unsigned char { Solved, ManageableNuisance, SystemicCrisis, Existential };

inline std::string to_string(Magnitude m) {
  switch (m) {
    case Magnitude::Solved: return "Solved";
    case Magnitude::ManageableNuisance: return "ManageableNuisance";
    case Magnitude::SystemicCrisis: return "SystemicCrisis";
    case Magnitude::Existential: return "Existential";
  }
  throw std::invalid_argument("unknown magnitude");
}

inline std::string display_name(Magnitude m) {
  switch (m) {
    case Magnitude::Solved: return "Solved";
    case Magnitude::ManageableNuisance: return "Manageable Nuisance";
    case Magnitude::SystemicCrisis: return "Systemic Crisis";
    case Magnitude::Existential: return "Existential";
  }
  throw std::invalid_argument("unknown magnitude");
}

/// Magnitude classes over the index value. The interval edges are half-open:
/// exactly 100 is a Systemic Crisis and exactly 1000 is Existential.
inline Magnitude magnitude(double iota) {
  if (iota < 0.0 || std::isnan(iota)) {
    throw std::invalid_argument("index must be non-negative");
  }
  if (iota == 0.0) return Magnitude::Solved;
  if (iota < 100.0) return Magnitude::ManageableNuisance;
  if (iota < 1000.0) return Magnitude::SystemicCrisis;
  return Magnitude::Existential;
}

struct TragedyIndexResult {
  double iota = 0.0;
  Magnitude magnitude = Magnitude::Solved;
};

/// Geometric mean of the five intensity values, computed in log space:
/// the levels are exact powers of ten, so the log-sum is an integer and the
/// only rounding is the final exponentiation. Zero if any condition is
/// Absent.
inline TragedyIndexResult tragedy_index(const ConditionProfile& profile) {
  int log_sum = 0;
  for (IntensityLevel level : profile) {
    if (level == IntensityLevel::Absent) return {0.0, Magnitude::Solved};
    log_sum += intensity_log10(level);
  }
  const double iota = std::pow(10.0, static_cast<double>(log_sum) / 5.0);
  return {iota, magnitude(iota)};
}

/// Table form of the index: rounded half-up to the nearest integer
/// (158.49 -> 158, 15.85 -> 16, 3981.07 -> 3981).
inline long long display_index(double iota) {
  return std::llround(iota);
}

/// Fraction of potential welfare lost to the coordination failure, in [0,1].
inline double normalized_rationality_gap(double u_coop, double u_nash) {
  if (!(u_coop > 0.0)) throw std::invalid_argument("cooperative welfare must be positive");
  if (u_nash < 0.0) throw std::invalid_argument("equilibrium welfare must be non-negative");
  if (u_nash > u_coop) {
    throw std::invalid_argument("equilibrium welfare cannot exceed cooperative welfare");
  }
  return (u_coop - u_nash) / u_coop;
}

/// Ratio of cooperative to equilibrium welfare. Returns +infinity when the
/// equilibrium welfare is zero (the existential-tragedy limit).
inline double price_of_anarchy(double u_coop, double u_nash) {
  if (!(u_coop > 0.0)) throw std::invalid_argument("cooperative welfare must be positive");
  if (u_nash < 0.0) throw std::invalid_argument("equilibrium welfare must be non-negative");
  if (u_nash == 0.0) return std::numeric_limits<double>::infinity();
  return u_coop / u_nash;
}

/// Temptation/reward/punishment/sucker payoffs of a symmetric game.
/// `dilemma` records whether they satisfy the T > R > P > S ordering.
struct SymmetricPayoffs {
  double temptation = 0.0;  // defect while all others cooperate
  double reward = 0.0;      // mutual cooperation
  double punishment = 0.0;  // mutual defection
  double sucker = 0.0;      // cooperate while all others defect
  bool dilemma = false;
};

/// Tension between individual incentive and collective benefit: (T-R)/(R-P).
inline double temptation_ratio(const SymmetricPayoffs& p) {
  if (!(p.reward > p.punishment)) {
    throw std::invalid_argument("temptation ratio requires reward > punishment");
  }
  return (p.temptation - p.reward) / (p.reward - p.punishment);
}

inline SymmetricPayoffs extract_symmetric_payoffs(const SymmetricSpec& sym) {
  const std::size_t n = sym.players();
  SymmetricPayoffs p;
  p.temptation = sym.payoff_defect(n - 1);
  p.reward = sym.payoff_cooperate(n - 1);
  p.punishment = sym.payoff_defect(0);
  p.sucker = sym.payoff_cooperate(0);
  p.dilemma = p.temptation > p.reward && p.reward > p.punishment && p.punishment > p.sucker;
  return p;
}

}  // namespace tragedy

#endif  // TRAGEDY_SEVERITY_HPP_
