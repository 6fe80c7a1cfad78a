// Copyright 2026 The belief-ess Authors.
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

#ifndef BELIEF_ESS_ESS_HPP_
#define BELIEF_ESS_ESS_HPP_

// Pure, mixed and belief-based ESS for symmetric two-strategy games.
//
// A resident S resists an invader T when
//   E(S,S) > E(T,S)                               (first order), or
//   E(S,S) = E(T,S)  and  E(S,T) > E(T,T)         (second order).
// Strict inequalities are evaluated as lhs > rhs + tol; a first-order
// difference within tol is a tie and routes to the second-order test. A tie
// there too is neutral stability, which is not reported as an ESS.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "belief_ess/errors.hpp"
#include "belief_ess/game.hpp"
#include "belief_ess/payoff.hpp"
#include "belief_ess/strategy.hpp"

namespace belief_ess {

enum class EssBranch {
  kStrict,          // first-order condition holds strictly
  kTieSecondOrder,  // first-order tie, second-order condition strict
  kNeutral,         // ties in both conditions
  kInvaded,         // a condition fails outright
  kEquivalent,      // invader is payoff-equivalent to the resident
};

inline const char* to_string(EssBranch b) {
  switch (b) {
    case EssBranch::kStrict: return "strict";
    case EssBranch::kTieSecondOrder: return "tie-then-second-order";
    case EssBranch::kNeutral: return "neutrally-stable";
    case EssBranch::kInvaded: return "invaded";
    case EssBranch::kEquivalent: return "equivalent";
  }
  return "unknown";
}

inline bool resists(EssBranch b) {
  return b == EssBranch::kStrict || b == EssBranch::kTieSecondOrder;
}

template <typename Scalar = double>
struct Margin {
  std::string condition;
  Scalar lhs;
  Scalar rhs;
  Scalar slack;  // lhs - rhs
};

/// Outcome of one resident-versus-invader test.
template <typename Scalar = double>
struct InvaderOutcome {
  Strategy<Scalar> invader;
  std::string invader_name;
  EssBranch branch;
  Margin<Scalar> first_order;
  std::optional<Margin<Scalar>> second_order;

  bool resisted() const { return resists(branch); }
};

template <typename Scalar = double>
struct PureEssDecision {
  PureStrategy strategy;
  EssBranch branch;
  Scalar e_ss;  // E(S,S)
  Scalar e_ts;  // E(T,S)
  Scalar e_st;  // E(S,T)
  Scalar e_tt;  // E(T,T)
  std::vector<Margin<Scalar>> margins;

  bool is_ess() const { return resists(branch); }
};

template <typename Scalar = double>
struct MixedEssResult {
  std::optional<MixedStrategy<Scalar>> ess;
  Scalar root;            // formal solution of the indifference equation
  std::string rejection;  // empty when `ess` is set
  std::vector<InvaderOutcome<Scalar>> checks;
};

template <typename Scalar = double>
struct VerifyReport {
  std::vector<InvaderOutcome<Scalar>> invaders;
  // Optional sweep over mixed invaders; recorded as evidence only.
  std::vector<InvaderOutcome<Scalar>> sweep;
  bool stable = true;

  bool sweep_stable() const {
    return std::all_of(sweep.begin(), sweep.end(), [](const auto& o) {
      return o.resisted() || o.branch == EssBranch::kEquivalent;
    });
  }
};

template <typename Scalar = double>
struct BeliefFamily {
  Scalar midpoint;
  Scalar delta_max;
  Scalar delta;
  std::optional<BeliefStrategy<Scalar>> member;
  std::optional<VerifyReport<Scalar>> verification;
  std::string note;

  bool verified() const { return verification && verification->stable; }
};

template <typename Scalar = double>
struct EssReport {
  std::array<std::string, 2> labels;
  typename SymmetricGame2<Scalar>::Matrix payoffs;
  Scalar tolerance;
  std::vector<PureEssDecision<Scalar>> pure_checks;
  std::optional<MixedEssResult<Scalar>> mixed;
  std::string mixed_status;
  std::optional<BeliefFamily<Scalar>> belief;

  std::vector<PureEssDecision<Scalar>> pure_ess() const {
    std::vector<PureEssDecision<Scalar>> out;
    for (const auto& d : pure_checks) {
      if (d.is_ess()) out.push_back(d);
    }
    return out;
  }
  std::optional<MixedStrategy<Scalar>> mixed_ess() const {
    return mixed ? mixed->ess : std::nullopt;
  }
  bool has_belief_ess() const { return belief && belief->verified(); }
  bool any_ess() const {
    return !pure_ess().empty() || mixed_ess().has_value() || has_belief_ess();
  }

  /// Every margin computed for a reported ESS.
  std::vector<Margin<Scalar>> margins() const {
    std::vector<Margin<Scalar>> out;
    auto add_outcomes = [&](const std::vector<InvaderOutcome<Scalar>>& v) {
      for (const auto& o : v) {
        if (o.branch == EssBranch::kEquivalent) continue;
        out.push_back(o.first_order);
        if (o.second_order) out.push_back(*o.second_order);
      }
    };
    for (const auto& d : pure_ess()) {
      out.insert(out.end(), d.margins.begin(), d.margins.end());
    }
    if (mixed_ess()) add_outcomes(mixed->checks);
    if (has_belief_ess()) add_outcomes(belief->verification->invaders);
    return out;
  }
};

namespace detail {

template <typename Scalar>
Margin<Scalar> make_margin(std::string condition, Scalar lhs, Scalar rhs) {
  return {std::move(condition), lhs, rhs, lhs - rhs};
}

// Runs the first/second-order test for `resident` against `invader`.
template <typename Scalar>
InvaderOutcome<Scalar> test_invader(const SymmetricGame2<Scalar>& game,
                                    const Strategy<Scalar>& resident,
                                    const std::string& resident_name,
                                    const Strategy<Scalar>& invader,
                                    Scalar tol) {
  const std::string t = to_spec_string(invader, game.labels());
  const std::string s = resident_name;
  InvaderOutcome<Scalar> out{invader, t, EssBranch::kInvaded, {}, {}};
  out.first_order = make_margin("E[" + s + "," + s + "] > E[" + t + "," + s + "]",
                                expected_payoff(game, resident, resident),
                                expected_payoff(game, invader, resident));
  if (std::abs(midpoint(invader) - midpoint(resident)) <= tol) {
    out.branch = EssBranch::kEquivalent;
    return out;
  }
  if (out.first_order.slack > tol) {
    out.branch = EssBranch::kStrict;
    return out;
  }
  if (std::abs(out.first_order.slack) > tol) return out;
  out.second_order =
      make_margin("E[" + s + "," + t + "] > E[" + t + "," + t + "]",
                  expected_payoff(game, resident, invader),
                  expected_payoff(game, invader, invader));
  if (out.second_order->slack > tol) {
    out.branch = EssBranch::kTieSecondOrder;
  } else if (std::abs(out.second_order->slack) <= tol) {
    out.branch = EssBranch::kNeutral;
  }
  return out;
}

}  // namespace detail

template <typename Scalar>
PureEssDecision<Scalar> check_pure_ess(const SymmetricGame2<Scalar>& game,
                                       PureStrategy s,
                                       Scalar tol = kDefaultEssTolerance) {
  const int i = s.index();
  const int j = 1 - i;
  const auto& lab = game.labels();
  PureEssDecision<Scalar> d{s, EssBranch::kInvaded, game(i, i), game(j, i),
                            game(i, j), game(j, j), {}};
  d.margins.push_back(detail::make_margin(
      "E(" + lab[i] + "," + lab[i] + ") > E(" + lab[j] + "," + lab[i] + ")",
      d.e_ss, d.e_ts));
  const Scalar first = d.margins.back().slack;
  if (first > tol) {
    d.branch = EssBranch::kStrict;
  } else if (std::abs(first) <= tol) {
    d.margins.push_back(detail::make_margin(
        "E(" + lab[i] + "," + lab[j] + ") > E(" + lab[j] + "," + lab[j] + ")",
        d.e_st, d.e_tt));
    const Scalar second = d.margins.back().slack;
    if (second > tol) {
      d.branch = EssBranch::kTieSecondOrder;
    } else if (std::abs(second) <= tol) {
      d.branch = EssBranch::kNeutral;
    }
  }
  return d;
}

/// Solves E(s1, I) = E(s2, I) for the weight p of s1 in I and keeps the root
/// when it is interior and I resists both pure invaders. Throws
/// DegenerateGame when the indifference equation has no unique root.
template <typename Scalar>
MixedEssResult<Scalar> find_mixed_ess(const SymmetricGame2<Scalar>& game,
                                      Scalar tol = kDefaultEssTolerance) {
  // p * alpha + (1 - p) * beta = 0
  const Scalar alpha = game(0, 0) - game(1, 0);
  const Scalar beta = game(0, 1) - game(1, 1);
  const Scalar coefficient = beta - alpha;
  if (std::abs(coefficient) <= tol) {
    throw Error(Errc::kDegenerateGame,
                std::abs(beta) <= tol
                    ? "every mixture is indifferent"
                    : "the indifference equation has no solution");
  }
  MixedEssResult<Scalar> out;
  out.root = beta / coefficient;
  if (!(out.root > tol && out.root < 1 - tol)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "indifference root p = " << out.root << " is not in (0, 1)";
    out.rejection = msg.str();
    return out;
  }
  const MixedStrategy<Scalar> candidate(out.root);
  const Strategy<Scalar> resident = candidate;
  const std::string name = to_spec_string(resident, game.labels());
  for (int k = 0; k < 2; ++k) {
    out.checks.push_back(detail::test_invader(
        game, resident, name, Strategy<Scalar>(PureStrategy(k)), tol));
  }
  for (const auto& c : out.checks) {
    if (!c.resisted()) {
      out.rejection = "indifference point is " + std::string(to_string(c.branch)) +
                      " against " + c.invader_name;
      return out;
    }
  }
  out.ess = candidate;
  return out;
}

namespace detail {

template <typename Scalar>
MixedStrategy<Scalar> require_mixed_ess(const SymmetricGame2<Scalar>& game,
                                        Scalar tol) {
  try {
    auto mixed = find_mixed_ess(game, tol);
    if (!mixed.ess) throw Error(Errc::kNoMixedEss, mixed.rejection);
    return *mixed.ess;
  } catch (const Error& e) {
    if (e.code() == Errc::kDegenerateGame) {
      throw Error(Errc::kNoMixedEss, e.what());
    }
    throw;
  }
}

}  // namespace detail

/// Largest half-width delta keeping [p* - delta, p* + delta] inside [0, 1].
template <typename Scalar>
Scalar max_delta(const SymmetricGame2<Scalar>& game,
                 Scalar tol = kDefaultEssTolerance) {
  const Scalar p = detail::require_mixed_ess(game, tol).p();
  return std::min(p, 1 - p);
}

/// Member of the belief-ESS family centred on the mixed ESS p*:
/// a = p* - delta, b = 1 - p* - delta, mass 2 delta on {s1, s2}.
template <typename Scalar>
BeliefStrategy<Scalar> find_belief_ess(const SymmetricGame2<Scalar>& game,
                                       Scalar delta,
                                       Scalar tol = kDefaultEssTolerance) {
  const Scalar p = detail::require_mixed_ess(game, tol).p();
  if (!(delta >= 0) || p - delta < -tol || p + delta > 1 + tol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "delta = " << delta << " must lie in [0, " << std::min(p, 1 - p)
        << "]";
    throw Error(Errc::kDeltaOutOfRange, msg.str());
  }
  return BeliefStrategy<Scalar>(std::max(p - delta, Scalar(0)),
                                std::max(1 - p - delta, Scalar(0)));
}

/// Tests `resident` against each invader (both pure strategies when the list
/// is empty). With `sweep`, mixed invaders p = 0.01, 0.02, ..., 0.99 are
/// tested too; they never change `stable`.
template <typename Scalar>
VerifyReport<Scalar> verify_ess(const SymmetricGame2<Scalar>& game,
                                const BeliefStrategy<Scalar>& resident,
                                std::vector<Strategy<Scalar>> invaders = {},
                                Scalar tol = kDefaultEssTolerance,
                                bool sweep = false) {
  if (invaders.empty()) invaders = {PureStrategy(0), PureStrategy(1)};
  const Strategy<Scalar> j = resident;
  const std::string name = "J";
  VerifyReport<Scalar> report;
  for (const auto& t : invaders) {
    report.invaders.push_back(detail::test_invader(game, j, name, t, tol));
    const auto& o = report.invaders.back();
    if (o.branch != EssBranch::kEquivalent && !o.resisted()) {
      report.stable = false;
    }
  }
  if (sweep) {
    for (int k = 1; k < 100; ++k) {
      const Strategy<Scalar> t = MixedStrategy<Scalar>(Scalar(k) / 100);
      report.sweep.push_back(detail::test_invader(game, j, name, t, tol));
    }
  }
  return report;
}

/// Full classification: both pure strategies, the mixed ESS, and the
/// belief-ESS family member of half-width `delta`.
template <typename Scalar>
EssReport<Scalar> classify(const SymmetricGame2<Scalar>& game,
                           Scalar delta = 0,
                           Scalar tol = kDefaultEssTolerance,
                           bool sweep = false) {
  EssReport<Scalar> report{game.labels(), game.payoffs(), tol, {}, {}, {}, {}};
  for (int k = 0; k < 2; ++k) {
    report.pure_checks.push_back(check_pure_ess(game, PureStrategy(k), tol));
  }
  try {
    report.mixed = find_mixed_ess(game, tol);
    report.mixed_status =
        report.mixed->ess ? "interior mixed ESS" : report.mixed->rejection;
  } catch (const Error& e) {
    if (e.code() != Errc::kDegenerateGame) throw;
    report.mixed_status = e.what();
  }
  if (!report.mixed_ess()) return report;

  const Scalar p = report.mixed_ess()->p();
  BeliefFamily<Scalar> family{p, std::min(p, 1 - p), delta, {}, {}, {}};
  if (delta < 0 || delta > family.delta_max + tol) {
    family.note = "delta outside [0, delta_max]";
  } else {
    family.member = find_belief_ess(game, delta, tol);
    family.verification =
        verify_ess(game, *family.member, {}, tol, sweep);
    family.note = family.verification->stable
                      ? "stable against both pure invaders"
                      : "not stable against a pure invader";
  }
  report.belief = std::move(family);
  return report;
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_ESS_HPP_
