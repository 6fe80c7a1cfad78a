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

#ifndef BELIEF_ESS_STRATEGY_HPP_
#define BELIEF_ESS_STRATEGY_HPP_

// Pure, mixed and belief strategies for a two-strategy game.
//
// A belief strategy J places mass a on {s1}, b on {s2} and the rest on
// {s1, s2}. The probability t of playing s1 is only known to lie in
// [Bel(s1), Pl(s1)] = [a, 1 - b].

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "belief_ess/errors.hpp"
#include "belief_ess/evidence.hpp"

namespace belief_ess {

class PureStrategy {
 public:
  explicit constexpr PureStrategy(int index) : index_(index) {
    if (index < 0 || index > 1) {
      throw Error(Errc::kIndexOutOfRange, "pure strategy index must be 0 or 1");
    }
  }

  constexpr int index() const { return index_; }
  constexpr PureStrategy other() const { return PureStrategy(1 - index_); }

  friend constexpr bool operator==(PureStrategy, PureStrategy) = default;

 private:
  int index_;
};

template <typename Scalar = double>
class MixedStrategy {
 public:
  /// `p` is the probability of playing strategy 0.
  explicit MixedStrategy(Scalar p) : p_(p) {
    if (!(p >= 0 && p <= 1)) {
      throw Error(Errc::kInvalidStrategy,
                  "mixed probability must lie in [0, 1]");
    }
  }

  Scalar p() const { return p_; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  Scalar p_;
};

template <typename Scalar = double>
struct Interval {
  Scalar lower;
  Scalar upper;

  Scalar width() const { return upper - lower; }
  Scalar midpoint() const { return (lower + upper) / 2; }
};

template <typename Scalar = double>
class BeliefStrategy {
 public:
  BeliefStrategy(Scalar a, Scalar b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a < 0 || b < 0 ||
        a + b > 1 + Scalar(kMassTolerance)) {
      throw Error(Errc::kInvalidStrategy,
                  "belief masses need a >= 0, b >= 0 and a + b <= 1");
    }
  }

  /// Mass on {s1}.
  Scalar a() const { return a_; }
  /// Mass on {s2}.
  Scalar b() const { return b_; }
  /// Mass on the ambiguous set {s1, s2}.
  Scalar ambiguous_mass() const {
    const Scalar rest = 1 - a_ - b_;
    return rest > 0 ? rest : Scalar(0);
  }

  friend bool operator==(const BeliefStrategy&,
                         const BeliefStrategy&) = default;

 private:
  Scalar a_;
  Scalar b_;
};

template <typename Scalar = double>
using Strategy =
    std::variant<PureStrategy, MixedStrategy<Scalar>, BeliefStrategy<Scalar>>;

/// [Bel(s1), Pl(s1)] = [a, 1 - b].
template <typename Scalar>
Interval<Scalar> belief_interval(const BeliefStrategy<Scalar>& j) {
  return {j.a(), 1 - j.b()};
}

/// Interval for the second strategy: [Bel(s2), Pl(s2)] = [b, 1 - a].
template <typename Scalar>
Interval<Scalar> belief_interval_second(const BeliefStrategy<Scalar>& j) {
  return {j.b(), 1 - j.a()};
}

template <typename Scalar>
BeliefStrategy<Scalar> from_mixed(const MixedStrategy<Scalar>& mixed) {
  return BeliefStrategy<Scalar>(mixed.p(), 1 - mixed.p());
}

template <typename Scalar = double>
BeliefStrategy<Scalar> from_pure(PureStrategy s) {
  return s.index() == 0 ? BeliefStrategy<Scalar>(1, 0)
                        : BeliefStrategy<Scalar>(0, 1);
}

/// The mixed strategy J collapses to, or nullopt when the interval has
/// width above kMassTolerance.
template <typename Scalar>
std::optional<MixedStrategy<Scalar>> to_mixed(const BeliefStrategy<Scalar>& j) {
  if (belief_interval(j).width() > Scalar(kMassTolerance)) return std::nullopt;
  return MixedStrategy<Scalar>(j.a());
}

template <typename Scalar>
MassFunction<Scalar> as_mass_function(const BeliefStrategy<Scalar>& j,
                                      const FrameOfDiscernment& frame) {
  if (frame.size() != 2) {
    throw Error(Errc::kWrongFrameSize,
                "a belief strategy needs a two-element frame, got " +
                    std::to_string(frame.size()));
  }
  std::vector<std::pair<Subset, Scalar>> assignments;
  if (j.a() > 0) assignments.emplace_back(Subset{0b01}, j.a());
  if (j.b() > 0) assignments.emplace_back(Subset{0b10}, j.b());
  if (j.ambiguous_mass() > 0) {
    assignments.emplace_back(Subset{0b11}, j.ambiguous_mass());
  }
  return make_mass_function<Scalar>(frame, assignments);
}

/// Embeds any strategy as a belief strategy (pure and mixed become
/// zero-width intervals).
template <typename Scalar>
BeliefStrategy<Scalar> to_belief(const Strategy<Scalar>& s) {
  if (auto* pure = std::get_if<PureStrategy>(&s)) {
    return from_pure<Scalar>(*pure);
  }
  if (auto* mixed = std::get_if<MixedStrategy<Scalar>>(&s)) {
    return from_mixed(*mixed);
  }
  return std::get<BeliefStrategy<Scalar>>(s);
}

/// Expected probability of playing s1 under the uniform interval reading.
template <typename Scalar>
Scalar midpoint(const Strategy<Scalar>& s) {
  if (auto* pure = std::get_if<PureStrategy>(&s)) {
    return pure->index() == 0 ? Scalar(1) : Scalar(0);
  }
  if (auto* mixed = std::get_if<MixedStrategy<Scalar>>(&s)) return mixed->p();
  return belief_interval(std::get<BeliefStrategy<Scalar>>(s)).midpoint();
}

/// Action-weight vector (t, 1 - t) at the strategy's midpoint.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> weights(const Strategy<Scalar>& s) {
  const Scalar t = midpoint(s);
  return Eigen::Matrix<Scalar, 2, 1>(t, 1 - t);
}

/// Renders a strategy in the command-line strategy grammar, e.g. "pure=H",
/// "mixed=0.5" or "belief=0.3,0.2".
template <typename Scalar>
std::string to_spec_string(const Strategy<Scalar>& s,
                           const std::array<std::string, 2>& labels) {
  std::ostringstream out;
  out.precision(12);
  if (auto* pure = std::get_if<PureStrategy>(&s)) {
    out << "pure=" << labels[pure->index()];
  } else if (auto* mixed = std::get_if<MixedStrategy<Scalar>>(&s)) {
    out << "mixed=" << mixed->p();
  } else {
    const auto& j = std::get<BeliefStrategy<Scalar>>(s);
    out << "belief=" << j.a() << "," << j.b();
  }
  return out.str();
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_STRATEGY_HPP_
