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

#ifndef BELIEF_ESS_REPORT_HPP_
#define BELIEF_ESS_REPORT_HPP_

#include <ostream>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "belief_ess/dynamics.hpp"
#include "belief_ess/ess.hpp"
#include "belief_ess/payoff.hpp"

namespace belief_ess::report {

// All numbers are written with 12 significant digits.
inline constexpr int kPrecision = 12;

std::string format_number(double v);

void write_text(std::ostream& out, const EssReport<double>& report);
nlohmann::json to_json(const EssReport<double>& report);

void write_text(std::ostream& out, const SymmetricGame2<double>& game,
                const BeliefStrategy<double>& resident,
                const VerifyReport<double>& verification);
nlohmann::json to_json(const SymmetricGame2<double>& game,
                       const BeliefStrategy<double>& resident,
                       const VerifyReport<double>& verification);

struct PayoffTable {
  std::string row;
  std::string col;
  PayoffResult<double> closed_form;
  std::optional<PayoffResult<double>> monte_carlo;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

void write_text(std::ostream& out, const PayoffTable& table);
nlohmann::json to_json(const PayoffTable& table);

nlohmann::json to_json(const Trajectory<double>& traj);

}  // namespace belief_ess::report

#endif  // BELIEF_ESS_REPORT_HPP_
