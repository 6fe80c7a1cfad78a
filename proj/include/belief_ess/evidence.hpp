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

#ifndef BELIEF_ESS_EVIDENCE_HPP_
#define BELIEF_ESS_EVIDENCE_HPP_

// Dempster-Shafer primitives over a small frame of discernment.
//
// Subsets of the frame are bitmasks: bit i set means the i-th label of the
// frame is a member. The empty set is never stored in a mass function.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "belief_ess/errors.hpp"

namespace belief_ess {

struct Subset {
  std::uint32_t bits = 0;

  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(Subset other) const {
    return (other.bits & ~bits) == 0;
  }
  constexpr bool intersects(Subset other) const {
    return (bits & other.bits) != 0;
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

class FrameOfDiscernment {
 public:
  static constexpr std::size_t kMaxSize = 16;

  explicit FrameOfDiscernment(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw Error(Errc::kInvalidArgument, "frame needs at least one element");
    }
    if (labels_.size() > kMaxSize) {
      throw Error(Errc::kFrameTooLarge,
                  "frame has " + std::to_string(labels_.size()) +
                      " elements; at most 16 are supported");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        if (labels_[i] == labels_[j]) {
          throw Error(Errc::kDuplicateLabel, "label '" + labels_[i] + "'");
        }
      }
    }
  }

  FrameOfDiscernment(std::initializer_list<std::string> labels)
      : FrameOfDiscernment(std::vector<std::string>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  Subset full() const {
    return Subset{static_cast<std::uint32_t>((1ULL << labels_.size()) - 1)};
  }

  bool within(Subset s) const { return full().contains(s); }

  Subset complement(Subset s) const {
    require_within(s);
    return Subset{full().bits & ~s.bits};
  }

  /// Subset built from labels; throws UnknownElement on a foreign label.
  Subset subset(std::initializer_list<std::string_view> members) const {
    Subset out;
    for (auto name : members) out.bits |= element(name).bits;
    return out;
  }

  Subset element(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == name) return Subset{1U << i};
    }
    throw Error(Errc::kUnknownElement, "'" + std::string(name) + "'");
  }

  void require_within(Subset s) const {
    if (!within(s)) {
      throw Error(Errc::kUnknownElement,
                  "subset mask " + std::to_string(s.bits) +
                      " has bits outside the frame");
    }
  }

  friend bool operator==(const FrameOfDiscernment&,
                         const FrameOfDiscernment&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Basic probability assignment: non-empty focal subsets with positive mass.
template <typename Scalar = double>
class MassFunction {
  static_assert(std::is_floating_point_v<Scalar>);

 public:
  using Masses = std::map<Subset, Scalar>;

  const FrameOfDiscernment& frame() const { return frame_; }
  const Masses& masses() const { return masses_; }

  /// Mass exactly on `s` (zero for non-focal subsets and for the empty set).
  Scalar mass(Subset s) const {
    frame_.require_within(s);
    auto it = masses_.find(s);
    return it == masses_.end() ? Scalar(0) : it->second;
  }

 private:
  template <typename S>
  friend MassFunction<S> make_mass_function(
      FrameOfDiscernment frame,
      const std::vector<std::pair<Subset, S>>& assignments);

  MassFunction(FrameOfDiscernment frame, Masses masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  FrameOfDiscernment frame_;
  Masses masses_;
};

/// Validates and normalizes a list of (subset, weight) pairs. Duplicate
/// subsets are summed, zero weights dropped, and a total within
/// kMassTolerance of one is rescaled to sum to one.
template <typename Scalar>
MassFunction<Scalar> make_mass_function(
    FrameOfDiscernment frame,
    const std::vector<std::pair<Subset, Scalar>>& assignments) {
  typename MassFunction<Scalar>::Masses masses;
  Scalar total = 0;
  for (const auto& [subset, weight] : assignments) {
    frame.require_within(subset);
    if (subset.empty()) {
      throw Error(Errc::kEmptySetAssigned, "the empty set carries no mass");
    }
    if (!std::isfinite(weight)) {
      throw Error(Errc::kNonFiniteEntry, "mass weight is not finite");
    }
    if (weight < 0) {
      throw Error(Errc::kNegativeWeight,
                  "weight " + std::to_string(static_cast<double>(weight)));
    }
    if (weight == 0) continue;
    masses[subset] += weight;
    total += weight;
  }
  if (std::abs(total - Scalar(1)) > Scalar(kMassTolerance)) {
    throw Error(Errc::kNotNormalized,
                "weights sum to " + std::to_string(static_cast<double>(total)));
  }
  if (total != Scalar(1)) {
    for (auto& entry : masses) entry.second /= total;
  }
  return MassFunction<Scalar>(std::move(frame), std::move(masses));
}

/// Bel(A): total mass of the focal sets contained in A.
template <typename Scalar>
Scalar belief(const MassFunction<Scalar>& m, Subset a) {
  m.frame().require_within(a);
  if (a == m.frame().full()) return Scalar(1);
  Scalar sum = 0;
  for (const auto& [focal, weight] : m.masses()) {
    if (a.contains(focal)) sum += weight;
  }
  return sum;
}

/// Pl(A): total mass of the focal sets that meet A.
template <typename Scalar>
Scalar plausibility(const MassFunction<Scalar>& m, Subset a) {
  m.frame().require_within(a);
  if (a == m.frame().full()) return Scalar(1);
  Scalar sum = 0;
  for (const auto& [focal, weight] : m.masses()) {
    if (a.intersects(focal)) sum += weight;
  }
  return sum;
}

}  // namespace belief_ess

#endif  // BELIEF_ESS_EVIDENCE_HPP_
