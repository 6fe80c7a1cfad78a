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

#ifndef BELIEF_ESS_IO_HPP_
#define BELIEF_ESS_IO_HPP_

// Text formats for game and strategy definitions.
//
// Game files hold `key = value` lines ('#' starts a comment):
//
//   labels  = [C, D]
//   payoffs = [[3, 0], [5, 1]]
//
// or, in place of `payoffs`, `hawk_dove = {V = 2, C = 4}`. Exactly one of
// the two must be present; `labels` is optional.
//
// Strategies are one of
//   pure = <label>         pure=<label>
//   mixed = {p = <real>}   mixed=<p>
//   belief = {a = <real>, b = <real>}   belief=<a>,<b>

#include <filesystem>
#include <string>
#include <string_view>

#include "belief_ess/game.hpp"
#include "belief_ess/strategy.hpp"

namespace belief_ess::io {

SymmetricGame2<double> parse_game(std::string_view text,
                                  std::string_view source = "<input>");

SymmetricGame2<double> load_game(const std::filesystem::path& path);

/// "V=2,C=4"
HawkDoveParams<double> parse_hawk_dove_flag(std::string_view text);

/// Parses a strategy in either grammar; labels resolve against `game`. A
/// leading '@' reads the definition from the named file.
Strategy<double> parse_strategy(std::string_view text,
                                const SymmetricGame2<double>& game);

}  // namespace belief_ess::io

#endif  // BELIEF_ESS_IO_HPP_
