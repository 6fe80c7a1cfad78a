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

#ifndef BELIEF_ESS_DYNAMICS_HPP_
#define BELIEF_ESS_DYNAMICS_HPP_

// Discrete replicator dynamics over a roster of strategies.
//
// With A(i, j) = E[roster_i, roster_j] and population shares x, one step is
//   f      = A x
//   x_i'  ~ x_i (f_i - min_k f_k + kFitnessShift)
// renormalized to sum to one; shares below kExtinctShare are set to zero.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "belief_ess/errors.hpp"
#include "belief_ess/game.hpp"
#include "belief_ess/payoff.hpp"
#include "belief_ess/strategy.hpp"

namespace belief_ess {

inline constexpr double kFitnessShift = 1e-9;
inline constexpr double kExtinctShare = 1e-12;
inline constexpr double kShareSumTolerance = 1e-9;
inline constexpr double kInvasionThreshold = 1e-6;
inline constexpr double kStationaryChange = 1e-12;

template <typename Scalar = double>
using Roster = std::vector<Strategy<Scalar>>;

template <typename Scalar = double>
class PopulationState {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit PopulationState(Vector shares) : shares_(std::move(shares)) {
    if (shares_.size() == 0) {
      throw Error(Errc::kEmptyRoster, "population needs at least one share");
    }
    if (!shares_.allFinite() || (shares_.array() < 0).any()) {
      throw Error(Errc::kInvalidArgument, "shares must be finite and >= 0");
    }
    if (std::abs(shares_.sum() - Scalar(1)) > Scalar(kShareSumTolerance)) {
      throw Error(Errc::kInvalidArgument, "shares must sum to one");
    }
  }

  const Vector& shares() const { return shares_; }
  Scalar operator[](Eigen::Index i) const { return shares_(i); }
  Eigen::Index size() const { return shares_.size(); }

 private:
  Vector shares_;
};

/// A(i, j) = E[roster_i, roster_j] from the closed forms.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> roster_payoffs(
    const SymmetricGame2<Scalar>& game, const Roster<Scalar>& roster) {
  if (roster.empty()) throw Error(Errc::kEmptyRoster, "roster is empty");
  const auto n = static_cast<Eigen::Index>(roster.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = expected_payoff(game, roster[i], roster[j]);
    }
  }
  return a;
}

/// Same matrix estimated by sampled encounters; entry (i, j) uses seed
/// `seed + i * n + j`.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> roster_payoffs_sampled(
    const SymmetricGame2<Scalar>& game, const Roster<Scalar>& roster,
    std::uint64_t samples, std::uint64_t seed) {
  if (roster.empty()) throw Error(Errc::kEmptyRoster, "roster is empty");
  const auto n = static_cast<Eigen::Index>(roster.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = mc_expected_payoff(game, roster[i], roster[j], samples,
                                   seed + static_cast<std::uint64_t>(i * n + j))
                    .value;
    }
  }
  return a;
}

template <typename Scalar, typename Derived>
PopulationState<Scalar> replicator_step(const Eigen::MatrixBase<Derived>& payoffs,
                                        const PopulationState<Scalar>& pop) {
  if (payoffs.rows() != pop.size() || payoffs.cols() != pop.size()) {
    throw Error(Errc::kInvalidArgument, "payoff matrix does not match roster");
  }
  using Vector = typename PopulationState<Scalar>::Vector;
  const Vector fitness = payoffs * pop.shares();
  const Vector shifted =
      (fitness.array() - fitness.minCoeff() + Scalar(kFitnessShift)).matrix();
  Vector next = pop.shares().cwiseProduct(shifted);
  next /= next.sum();
  for (Eigen::Index i = 0; i < next.size(); ++i) {
    if (next(i) < Scalar(kExtinctShare)) next(i) = 0;
  }
  next /= next.sum();
  return PopulationState<Scalar>(std::move(next));
}

template <typename Scalar>
PopulationState<Scalar> replicator_step(const SymmetricGame2<Scalar>& game,
                                        const Roster<Scalar>& roster,
                                        const PopulationState<Scalar>& pop) {
  return replicator_step(roster_payoffs(game, roster), pop);
}

enum class Verdict { kInvaderExtinct, kInvaderFixated, kCoexistence, kMaxSteps };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kInvaderExtinct: return "invader_extinct";
    case Verdict::kInvaderFixated: return "invader_fixated";
    case Verdict::kCoexistence: return "coexistence";
    case Verdict::kMaxSteps: return "max_steps";
  }
  return "unknown";
}

template <typename Scalar = double>
struct Trajectory {
  struct Record {
    std::uint64_t step;
    PopulationState<Scalar> state;
  };
  std::vector<Record> records;
  Verdict verdict = Verdict::kMaxSteps;
  std::uint64_t steps_taken = 0;

  Scalar final_mutant_share() const { return records.back().state[1]; }
};

enum class EncounterMode { kClosedForm, kSampled };

struct InvasionOptions {
  double epsilon = 0.01;
  std::uint64_t max_steps = 100000;
  std::uint64_t record_stride = 1;
  EncounterMode mode = EncounterMode::kClosedForm;
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 0;
};

/// Starts from shares (1 - epsilon, epsilon) for (resident, mutant) and
/// iterates until the mutant share leaves [kInvasionThreshold,
/// 1 - kInvasionThreshold], the state stops moving, or max_steps is reached.
template <typename Scalar>
Trajectory<Scalar> invasion_experiment(const SymmetricGame2<Scalar>& game,
                                       const Strategy<Scalar>& resident,
                                       const Strategy<Scalar>& mutant,
                                       const InvasionOptions& options = {}) {
  if (!(options.epsilon > 0 && options.epsilon < 0.5)) {
    throw Error(Errc::kInvalidArgument, "epsilon must lie in (0, 0.5)");
  }
  if (options.max_steps < 1) {
    throw Error(Errc::kInvalidArgument, "max_steps must be at least 1");
  }
  const std::uint64_t stride = options.record_stride == 0 ? 1 : options.record_stride;
  const Roster<Scalar> roster{resident, mutant};
  const auto payoffs =
      options.mode == EncounterMode::kSampled
          ? roster_payoffs_sampled(game, roster, options.mc_samples, options.seed)
          : roster_payoffs(game, roster);

  typename PopulationState<Scalar>::Vector start(2);
  start << 1 - Scalar(options.epsilon), Scalar(options.epsilon);
  PopulationState<Scalar> pop(start);

  Trajectory<Scalar> traj;
  traj.records.push_back({0, pop});
  std::uint64_t step = 0;
  while (step < options.max_steps) {
    PopulationState<Scalar> next = replicator_step<Scalar>(payoffs, pop);
    ++step;
    const Scalar change = (next.shares() - pop.shares()).cwiseAbs().maxCoeff();
    pop = std::move(next);
    if (pop[1] < Scalar(kInvasionThreshold)) {
      traj.verdict = Verdict::kInvaderExtinct;
    } else if (pop[1] > 1 - Scalar(kInvasionThreshold)) {
      traj.verdict = Verdict::kInvaderFixated;
    } else if (change < Scalar(kStationaryChange)) {
      traj.verdict = Verdict::kCoexistence;
    } else {
      if (step % stride == 0) traj.records.push_back({step, pop});
      continue;
    }
    break;
  }
  if (traj.records.back().step != step) traj.records.push_back({step, pop});
  traj.steps_taken = step;
  return traj;
}

/// Delimited export: a header, one "step,share_0,...,share_n" record per
/// stride, then "verdict,<name>".
template <typename Scalar>
void write_trajectory(std::ostream& out, const Trajectory<Scalar>& traj) {
  const auto old_precision = out.precision(12);
  const Eigen::Index n = traj.records.front().state.size();
  out << "step";
  for (Eigen::Index i = 0; i < n; ++i) out << ",share_" << i;
  out << '\n';
  for (const auto& r : traj.records) {
    out << r.step;
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << r.state[i];
    out << '\n';
  }
  out << "verdict," << to_string(traj.verdict) << '\n';
  out.precision(old_precision);
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_DYNAMICS_HPP_
