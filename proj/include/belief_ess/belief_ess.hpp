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

#ifndef BELIEF_ESS_BELIEF_ESS_HPP_
#define BELIEF_ESS_BELIEF_ESS_HPP_

#include "belief_ess/dynamics.hpp"
#include "belief_ess/errors.hpp"
#include "belief_ess/ess.hpp"
#include "belief_ess/evidence.hpp"
#include "belief_ess/game.hpp"
#include "belief_ess/payoff.hpp"
#include "belief_ess/strategy.hpp"

#endif  // BELIEF_ESS_BELIEF_ESS_HPP_
