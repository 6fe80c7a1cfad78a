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

#include "belief_ess/report.hpp"

#include <sstream>

namespace belief_ess::report {
namespace {

using nlohmann::json;

// nlohmann::json prints doubles with full round-trip precision; route them
// through format_number so text and JSON agree digit for digit.
json num(double v) { return json::parse(format_number(v)); }

std::string matrix_text(const SymmetricGame2<double>::Matrix& m) {
  return "[[" + format_number(m(0, 0)) + ", " + format_number(m(0, 1)) +
         "], [" + format_number(m(1, 0)) + ", " + format_number(m(1, 1)) +
         "]]";
}

void write_margin(std::ostream& out, const Margin<double>& m,
                  const char* indent) {
  out << indent << m.condition << ": lhs = " << format_number(m.lhs)
      << ", rhs = " << format_number(m.rhs)
      << ", slack = " << format_number(m.slack) << '\n';
}

json margin_json(const Margin<double>& m) {
  return {{"condition", m.condition},
          {"lhs", num(m.lhs)},
          {"rhs", num(m.rhs)},
          {"slack", num(m.slack)}};
}

void write_outcome(std::ostream& out, const InvaderOutcome<double>& o) {
  out << "  invader " << o.invader_name << ": " << to_string(o.branch) << '\n';
  if (o.branch == EssBranch::kEquivalent) return;
  write_margin(out, o.first_order, "    ");
  if (o.second_order) write_margin(out, *o.second_order, "    ");
}

json outcome_json(const InvaderOutcome<double>& o) {
  json j{{"invader", o.invader_name},
         {"branch", to_string(o.branch)},
         {"resisted", o.resisted()},
         {"first_order", margin_json(o.first_order)}};
  if (o.second_order) j["second_order"] = margin_json(*o.second_order);
  return j;
}

json game_json(const std::array<std::string, 2>& labels,
               const SymmetricGame2<double>::Matrix& m) {
  return {{"labels", labels},
          {"payoffs",
           {{num(m(0, 0)), num(m(0, 1))}, {num(m(1, 0)), num(m(1, 1))}}}};
}

void write_game(std::ostream& out, const std::array<std::string, 2>& labels,
                const SymmetricGame2<double>::Matrix& m) {
  out << "[game]\n"
      << "labels = [" << labels[0] << ", " << labels[1] << "]\n"
      << "payoffs = " << matrix_text(m) << '\n';
}

void write_belief_member(std::ostream& out, const BeliefStrategy<double>& j,
                         const std::array<std::string, 2>& labels) {
  const auto iv = belief_interval(j);
  out << "a = " << format_number(j.a()) << '\n'
      << "b = " << format_number(j.b()) << '\n'
      << "m({" << labels[0] << "," << labels[1]
      << "}) = " << format_number(j.ambiguous_mass()) << '\n'
      << "interval = [" << format_number(iv.lower) << ", "
      << format_number(iv.upper) << "]\n";
}

json belief_member_json(const BeliefStrategy<double>& j) {
  const auto iv = belief_interval(j);
  return {{"a", num(j.a())},
          {"b", num(j.b())},
          {"ambiguous_mass", num(j.ambiguous_mass())},
          {"bel", num(iv.lower)},
          {"pl", num(iv.upper)}};
}

json verification_json(const VerifyReport<double>& v) {
  json j{{"stable", v.stable}, {"invaders", json::array()}};
  for (const auto& o : v.invaders) j["invaders"].push_back(outcome_json(o));
  if (!v.sweep.empty()) {
    json sweep = json::array();
    for (const auto& o : v.sweep) sweep.push_back(outcome_json(o));
    j["sweep"] = {{"all_resisted", v.sweep_stable()}, {"outcomes", sweep}};
  }
  return j;
}

void write_verification(std::ostream& out, const VerifyReport<double>& v) {
  for (const auto& o : v.invaders) write_outcome(out, o);
  if (!v.sweep.empty()) {
    int resisted = 0;
    int equivalent = 0;
    for (const auto& o : v.sweep) {
      if (o.branch == EssBranch::kEquivalent) {
        ++equivalent;
      } else if (o.resisted()) {
        ++resisted;
      }
    }
    out << "sweep = " << resisted << " of "
        << v.sweep.size() - static_cast<std::size_t>(equivalent)
        << " mixed invaders resisted (" << equivalent << " equivalent)\n";
  }
}

}  // namespace

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(kPrecision);
  out << v;
  return out.str();
}

void write_text(std::ostream& out, const EssReport<double>& r) {
  write_game(out, r.labels, r.payoffs);
  out << "tolerance = " << format_number(r.tolerance) << "\n\n[pure]\n";
  for (const auto& d : r.pure_checks) {
    out << r.labels[d.strategy.index()] << ": "
        << (d.is_ess() ? "ESS" : "not ESS") << " (" << to_string(d.branch)
        << ")\n";
    for (const auto& m : d.margins) write_margin(out, m, "  ");
  }

  out << "\n[mixed]\n";
  out << "status = " << r.mixed_status << '\n';
  if (r.mixed) {
    out << "root = " << format_number(r.mixed->root) << '\n';
    if (r.mixed->ess) out << "p = " << format_number(r.mixed->ess->p()) << '\n';
    for (const auto& o : r.mixed->checks) write_outcome(out, o);
  }

  out << "\n[belief]\n";
  if (!r.belief) {
    out << "status = no belief-ESS family (requires an interior mixed ESS)\n";
  } else {
    const auto& f = *r.belief;
    out << "midpoint = " << format_number(f.midpoint) << '\n'
        << "delta_max = " << format_number(f.delta_max) << '\n'
        << "delta = " << format_number(f.delta) << '\n';
    if (f.member) write_belief_member(out, *f.member, r.labels);
    out << "verified = " << (f.verified() ? "true" : "false") << '\n'
        << "note = " << f.note << '\n';
    if (f.verification) write_verification(out, *f.verification);
  }

  out << "\n[summary]\n";
  out << "pure_ess = [";
  const auto pure = r.pure_ess();
  for (std::size_t i = 0; i < pure.size(); ++i) {
    out << (i ? ", " : "") << r.labels[pure[i].strategy.index()];
  }
  out << "]\n";
  out << "mixed_ess = "
      << (r.mixed_ess() ? format_number(r.mixed_ess()->p()) : "none") << '\n';
  out << "belief_ess = " << (r.has_belief_ess() ? "verified" : "none") << '\n';
  out << "ess_found = " << (r.any_ess() ? "true" : "false") << '\n';
}

json to_json(const EssReport<double>& r) {
  json j{{"game", game_json(r.labels, r.payoffs)},
         {"tolerance", num(r.tolerance)}};
  json pure = json::array();
  for (const auto& d : r.pure_checks) {
    json m = json::array();
    for (const auto& x : d.margins) m.push_back(margin_json(x));
    pure.push_back({{"strategy", r.labels[d.strategy.index()]},
                    {"ess", d.is_ess()},
                    {"branch", to_string(d.branch)},
                    {"margins", m}});
  }
  j["pure"] = pure;

  json mixed{{"status", r.mixed_status}};
  if (r.mixed) {
    mixed["root"] = num(r.mixed->root);
    mixed["p"] = r.mixed->ess ? num(r.mixed->ess->p()) : json(nullptr);
    json checks = json::array();
    for (const auto& o : r.mixed->checks) checks.push_back(outcome_json(o));
    mixed["checks"] = checks;
  } else {
    mixed["p"] = nullptr;
  }
  j["mixed"] = mixed;

  if (r.belief) {
    const auto& f = *r.belief;
    json b{{"midpoint", num(f.midpoint)},
           {"delta_max", num(f.delta_max)},
           {"delta", num(f.delta)},
           {"verified", f.verified()},
           {"note", f.note}};
    if (f.member) b["member"] = belief_member_json(*f.member);
    if (f.verification) b["verification"] = verification_json(*f.verification);
    j["belief"] = b;
  } else {
    j["belief"] = nullptr;
  }

  json margins = json::array();
  for (const auto& m : r.margins()) margins.push_back(margin_json(m));
  j["margins"] = margins;
  j["ess_found"] = r.any_ess();
  return j;
}

void write_text(std::ostream& out, const SymmetricGame2<double>& game,
                const BeliefStrategy<double>& resident,
                const VerifyReport<double>& v) {
  write_game(out, game.labels(), game.payoffs());
  out << "\n[resident]\n"
      << "J = " << to_spec_string<double>(resident, game.labels()) << '\n';
  write_belief_member(out, resident, game.labels());
  out << "\n[verification]\n";
  write_verification(out, v);
  out << "stable = " << (v.stable ? "true" : "false") << '\n';
}

json to_json(const SymmetricGame2<double>& game,
             const BeliefStrategy<double>& resident,
             const VerifyReport<double>& v) {
  return {{"game", game_json(game.labels(), game.payoffs())},
          {"resident", belief_member_json(resident)},
          {"verification", verification_json(v)}};
}

void write_text(std::ostream& out, const PayoffTable& t) {
  out << "row = " << t.row << '\n' << "col = " << t.col << '\n';
  out << "closed_form = " << format_number(t.closed_form.value) << '\n';
  if (t.monte_carlo) {
    const double se = t.monte_carlo->std_error.value_or(0.0);
    out << "monte_carlo = " << format_number(t.monte_carlo->value) << '\n'
        << "stderr = " << format_number(se) << '\n'
        << "samples = " << t.samples << '\n'
        << "seed = " << t.seed << '\n'
        << "z = "
        << format_number(se > 0 ? (t.monte_carlo->value - t.closed_form.value) / se
                                : 0.0)
        << '\n';
  }
}

json to_json(const PayoffTable& t) {
  json j{{"row", t.row},
         {"col", t.col},
         {"closed_form", {{"value", num(t.closed_form.value)}, {"method", "closed_form"}}}};
  if (t.monte_carlo) {
    j["monte_carlo"] = {{"value", num(t.monte_carlo->value)},
                        {"method", "monte_carlo"},
                        {"stderr", num(t.monte_carlo->std_error.value_or(0.0))},
                        {"samples", t.samples},
                        {"seed", t.seed}};
  }
  return j;
}

json to_json(const Trajectory<double>& traj) {
  json records = json::array();
  for (const auto& r : traj.records) {
    json shares = json::array();
    for (Eigen::Index i = 0; i < r.state.size(); ++i) shares.push_back(num(r.state[i]));
    records.push_back({{"step", r.step}, {"shares", shares}});
  }
  return {{"verdict", to_string(traj.verdict)},
          {"steps", traj.steps_taken},
          {"records", records}};
}

}  // namespace belief_ess::report
