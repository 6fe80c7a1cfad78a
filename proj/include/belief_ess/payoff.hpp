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

#ifndef BELIEF_ESS_PAYOFF_HPP_
#define BELIEF_ESS_PAYOFF_HPP_

// Expected payoffs between pure, mixed and belief strategies.
//
// A belief strategy J is played by drawing t ~ Uniform[Bel(s1), Pl(s1)] and
// then s1 with probability t. Payoffs are bilinear in the two players' t, so
// every closed form depends on J only through the interval midpoint. The
// 1 / (Pl - Bel) density factor cancels analytically and is never evaluated;
// zero-width intervals need no special case.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "belief_ess/errors.hpp"
#include "belief_ess/game.hpp"
#include "belief_ess/strategy.hpp"

namespace belief_ess {

enum class PayoffMethod { kClosedForm, kMonteCarlo };

template <typename Scalar = double>
struct PayoffResult {
  Scalar value;
  PayoffMethod method = PayoffMethod::kClosedForm;
  // Standard error of the mean; set only for Monte-Carlo estimates.
  std::optional<Scalar> std_error;

  static PayoffResult closed_form(Scalar v) { return {v, PayoffMethod::kClosedForm, {}}; }
};

/// sum_ij p1_i p2_j E(i, j)
template <typename Scalar>
PayoffResult<Scalar> expected_mixed_vs_mixed(const SymmetricGame2<Scalar>& game,
                                             const MixedStrategy<Scalar>& row,
                                             const MixedStrategy<Scalar>& col) {
  const Eigen::Matrix<Scalar, 2, 1> w_row(row.p(), 1 - row.p());
  const Eigen::Matrix<Scalar, 2, 1> w_col(col.p(), 1 - col.p());
  return PayoffResult<Scalar>::closed_form(w_row.dot(game.payoffs() * w_col));
}

/// E[s, J] = [E(s,s1) - E(s,s2)] * (Bel + Pl)/2 + E(s,s2)
template <typename Scalar>
PayoffResult<Scalar> expected_pure_vs_belief(const SymmetricGame2<Scalar>& game,
                                             PureStrategy s,
                                             const BeliefStrategy<Scalar>& j) {
  const int i = s.index();
  const Scalar mid = belief_interval(j).midpoint();
  return PayoffResult<Scalar>::closed_form((game(i, 0) - game(i, 1)) * mid +
                                           game(i, 1));
}

/// E[J, t] = [E(s1,t) - E(s2,t)] * (Bel + Pl)/2 + E(s2,t)
template <typename Scalar>
PayoffResult<Scalar> expected_belief_vs_pure(const SymmetricGame2<Scalar>& game,
                                             const BeliefStrategy<Scalar>& j,
                                             PureStrategy t) {
  const int k = t.index();
  const Scalar mid = belief_interval(j).midpoint();
  return PayoffResult<Scalar>::closed_form((game(0, k) - game(1, k)) * mid +
                                           game(1, k));
}

/// Independent uniform draws for both players; the bilinear form evaluated
/// at the two midpoints.
template <typename Scalar>
PayoffResult<Scalar> expected_belief_vs_belief(
    const SymmetricGame2<Scalar>& game, const BeliefStrategy<Scalar>& j,
    const BeliefStrategy<Scalar>& k) {
  const Scalar mj = belief_interval(j).midpoint();
  const Scalar mk = belief_interval(k).midpoint();
  const Eigen::Matrix<Scalar, 2, 1> wj(mj, 1 - mj);
  const Eigen::Matrix<Scalar, 2, 1> wk(mk, 1 - mk);
  return PayoffResult<Scalar>::closed_form(wj.dot(game.payoffs() * wk));
}

/// Closed-form E[row, col] for any pairing of strategy levels.
template <typename Scalar>
Scalar expected_payoff(const SymmetricGame2<Scalar>& game,
                       const Strategy<Scalar>& row,
                       const Strategy<Scalar>& col) {
  const auto* row_pure = std::get_if<PureStrategy>(&row);
  const auto* col_pure = std::get_if<PureStrategy>(&col);
  if (row_pure && col_pure) return game(row_pure->index(), col_pure->index());
  if (row_pure) {
    return expected_pure_vs_belief(game, *row_pure, to_belief(col)).value;
  }
  if (col_pure) {
    return expected_belief_vs_pure(game, to_belief(row), *col_pure).value;
  }
  const auto* row_mixed = std::get_if<MixedStrategy<Scalar>>(&row);
  const auto* col_mixed = std::get_if<MixedStrategy<Scalar>>(&col);
  if (row_mixed && col_mixed) {
    return expected_mixed_vs_mixed(game, *row_mixed, *col_mixed).value;
  }
  return expected_belief_vs_belief(game, to_belief(row), to_belief(col)).value;
}

// ---------------------------------------------------------------------------
// Monte-Carlo oracle

/// Generator behind every Monte-Carlo estimate: 64-bit Mersenne Twister
/// (MT19937-64). Worker k of a run with seed s is seeded with
/// std::seed_seq{lo32(s), hi32(s), k}; trials are split into contiguous
/// blocks, the first n % workers workers taking one extra trial. Results are
/// bit-reproducible for a fixed (n, seed, workers) on one platform.
using McEngine = std::mt19937_64;

inline McEngine make_substream(std::uint64_t seed, std::uint32_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU),
                    static_cast<std::uint32_t>(seed >> 32), worker};
  return McEngine(seq);
}

namespace detail {

// Running mean and sum of squared deviations (Welford).
template <typename Scalar>
struct Moments {
  std::uint64_t count = 0;
  Scalar mean = 0;
  Scalar m2 = 0;

  void add(Scalar x) {
    ++count;
    const Scalar d = x - mean;
    mean += d / static_cast<Scalar>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const Scalar n_a = static_cast<Scalar>(count);
    const Scalar n_b = static_cast<Scalar>(o.count);
    const Scalar n = n_a + n_b;
    const Scalar d = o.mean - mean;
    mean += d * n_b / n;
    m2 += o.m2 + d * d * n_a * n_b / n;
    count += o.count;
  }
};

template <typename Scalar>
Scalar uniform01(McEngine& rng) {
  return std::generate_canonical<Scalar, std::numeric_limits<Scalar>::digits>(
      rng);
}

// Density of the draw t on [lower, upper]: uniform.
template <typename Scalar>
Scalar draw_t(const Interval<Scalar>& iv, McEngine& rng) {
  return iv.lower + iv.width() * uniform01<Scalar>(rng);
}

template <typename Scalar>
Moments<Scalar> run_trials(const SymmetricGame2<Scalar>& game,
                           const Interval<Scalar>& row,
                           const Interval<Scalar>& col, std::uint64_t n,
                           McEngine rng) {
  Moments<Scalar> acc;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Scalar t_row = draw_t(row, rng);
    const Scalar t_col = draw_t(col, rng);
    const int a_row = uniform01<Scalar>(rng) < t_row ? 0 : 1;
    const int a_col = uniform01<Scalar>(rng) < t_col ? 0 : 1;
    acc.add(game(a_row, a_col));
  }
  return acc;
}

}  // namespace detail

/// Sampled E[row, col]: per trial, draw each player's t from its interval,
/// then each player's pure action, and record the row player's payoff.
template <typename Scalar>
PayoffResult<Scalar> mc_expected_payoff(const SymmetricGame2<Scalar>& game,
                                        const BeliefStrategy<Scalar>& row,
                                        const BeliefStrategy<Scalar>& col,
                                        std::uint64_t n, std::uint64_t seed,
                                        unsigned workers = 1) {
  if (n == 0) throw Error(Errc::kZeroSamples, "need at least one trial");
  if (workers == 0) workers = 1;
  const auto row_iv = belief_interval(row);
  const auto col_iv = belief_interval(col);

  std::vector<detail::Moments<Scalar>> parts(workers);
  auto block = [&](unsigned k) {
    return n / workers + (k < n % workers ? 1 : 0);
  };
  if (workers == 1) {
    parts[0] = detail::run_trials(game, row_iv, col_iv, n, make_substream(seed, 0));
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) {
      threads.emplace_back([&, k] {
        parts[k] = detail::run_trials(game, row_iv, col_iv, block(k),
                                      make_substream(seed, k));
      });
    }
    for (auto& t : threads) t.join();
  }

  detail::Moments<Scalar> total;
  for (const auto& p : parts) total.merge(p);
  Scalar se = 0;
  if (total.count > 1) {
    const Scalar var = total.m2 / static_cast<Scalar>(total.count - 1);
    se = std::sqrt(std::max(var, Scalar(0)) / static_cast<Scalar>(total.count));
  }
  return {total.mean, PayoffMethod::kMonteCarlo, se};
}

template <typename Scalar>
PayoffResult<Scalar> mc_expected_payoff(const SymmetricGame2<Scalar>& game,
                                        const Strategy<Scalar>& row,
                                        const Strategy<Scalar>& col,
                                        std::uint64_t n, std::uint64_t seed,
                                        unsigned workers = 1) {
  return mc_expected_payoff(game, to_belief(row), to_belief(col), n, seed,
                            workers);
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_PAYOFF_HPP_
