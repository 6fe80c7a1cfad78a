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

#ifndef BELIEF_ESS_GAME_HPP_
#define BELIEF_ESS_GAME_HPP_

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "belief_ess/errors.hpp"

namespace belief_ess {

template <typename Scalar = double>
struct HawkDoveParams {
  Scalar value;  // V, the contested resource
  Scalar cost;   // C, the cost of injury
};

/// Symmetric two-strategy game. payoffs()(i, j) is E(s_i, s_j): the payoff
/// to a player using s_i against an opponent using s_j.
template <typename Scalar = double>
class SymmetricGame2 {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;
  using Labels = std::array<std::string, 2>;

  SymmetricGame2(Labels labels, const Matrix& payoffs,
                 std::optional<HawkDoveParams<Scalar>> hawk_dove = {})
      : labels_(std::move(labels)),
        payoffs_(payoffs),
        hawk_dove_(hawk_dove) {
    if (labels_[0] == labels_[1]) {
      throw Error(Errc::kDuplicateLabel, "strategy labels must differ");
    }
    if (!payoffs_.allFinite()) {
      throw Error(Errc::kNonFiniteEntry, "payoff entries must be finite");
    }
  }

  explicit SymmetricGame2(const Matrix& payoffs)
      : SymmetricGame2(Labels{"s1", "s2"}, payoffs) {}

  const Labels& labels() const { return labels_; }
  const Matrix& payoffs() const { return payoffs_; }
  const std::optional<HawkDoveParams<Scalar>>& hawk_dove_params() const {
    return hawk_dove_;
  }

  Scalar operator()(int row, int col) const { return payoffs_(row, col); }

  int index_of(std::string_view label) const {
    for (int i = 0; i < 2; ++i) {
      if (labels_[i] == label) return i;
    }
    throw Error(Errc::kUnknownLabel,
                "'" + std::string(label) + "' is not a strategy of this game");
  }

 private:
  Labels labels_;
  Matrix payoffs_;
  std::optional<HawkDoveParams<Scalar>> hawk_dove_;
};

/// Hawk-Dove: rows and columns ordered (H, D).
///   E(H,H) = (V-C)/2   E(H,D) = V
///   E(D,H) = 0         E(D,D) = V/2
template <typename Scalar>
SymmetricGame2<Scalar> hawk_dove(HawkDoveParams<Scalar> params) {
  const Scalar v = params.value;
  const Scalar c = params.cost;
  if (!std::isfinite(v) || !std::isfinite(c)) {
    throw Error(Errc::kNonFiniteEntry, "V and C must be finite");
  }
  if (!(v > 0) || !(c > 0)) {
    throw Error(Errc::kNonPositiveParameter, "V and C must both be positive");
  }
  typename SymmetricGame2<Scalar>::Matrix m;
  m << (v - c) / 2, v, Scalar(0), v / 2;
  return SymmetricGame2<Scalar>({"H", "D"}, m, params);
}

inline SymmetricGame2<double> hawk_dove(double value, double cost) {
  return hawk_dove(HawkDoveParams<double>{value, cost});
}

/// E(s, t) with range checking on both indices.
template <typename Scalar>
Scalar payoff(const SymmetricGame2<Scalar>& game, int s, int t) {
  if (s < 0 || s > 1 || t < 0 || t > 1) {
    throw Error(Errc::kIndexOutOfRange,
                "pure strategy indices must be 0 or 1");
  }
  return game(s, t);
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_GAME_HPP_
