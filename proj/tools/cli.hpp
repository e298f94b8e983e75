// Copyright 2026 The infgame Authors
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

// Command-line front end. run() is separate from main() so tests can drive
// it in-process.
//
// Exit codes: 0 pass, 1 property false or counterexamples found, 2 usage or
// input error.

#ifndef INFGAME_TOOLS_CLI_HPP_
#define INFGAME_TOOLS_CLI_HPP_

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infgame/infgame.hpp"

namespace infgame::cli {

namespace detail {

inline const char* tf(bool b) { return b ? "true" : "false"; }

inline const ParsedBlock& load(std::map<std::string, std::vector<ParsedBlock>>& cache,
                               const std::string& file, const std::string& name) {
  auto it = cache.find(file);
  if (it == cache.end()) it = cache.emplace(file, parse_file(file)).first;
  return find_block(it->second, name);
}

inline StratProf as_profile(const ParsedBlock& b) {
  if (b.graph.kind() != GraphKind::profile) {
    throw Error(b.name + " is a " + std::string(to_string(b.graph.kind())) +
                ", expected a profile");
  }
  return StratProf(b.graph);
}

inline const std::map<std::string, std::function<bool(const StratProf&)>>& predicates() {
  static const std::map<std::string, std::function<bool(const StratProf&)>> table = {
      {"conv", [](const StratProf& s) { return converges(s).root_verdict; }},
      {"sconv", [](const StratProf& s) { return strongly_converges(s).root_verdict; }},
      {"pe", [](const StratProf& s) { return is_pe(s).root_verdict; }},
      {"spe", [](const StratProf& s) { return is_spe(s); }},
      {"bi", [](const StratProf& s) { return is_bi(s); }},
      {"s0", [](const StratProf& s) { return sat_s0(s); }},
      {"s1", [](const StratProf& s) { return sat_s1(s); }},
      {"acbes", [](const StratProf& s) { return is_acbes(s); }},
      {"sacbes", [](const StratProf& s) { return is_sacbes(s); }},
      {"bcaes", [](const StratProf& s) { return is_bcaes(s); }},
      {"sbcaes", [](const StratProf& s) { return is_sbcaes(s); }},
  };
  return table;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coinductive checks on finite and infinite sequential games", "infgame"};
  app.require_subcommand(1, 1);

  std::string file, name, name2, pred, out_path, sum_name = "sum";
  std::vector<std::string> names;
  std::size_t depth = 0, prefix = 0, period = 1, n = 1;
  bool lines = false;

  auto* check = app.add_subcommand("check", "Evaluate a predicate on a profile");
  std::vector<std::string> pred_names;
  for (const auto& [k, _] : detail::predicates()) pred_names.push_back(k);
  check->add_option("--pred", pred, "Predicate")->required()->check(CLI::IsMember(pred_names));
  check->add_option("file", file, ".gg file")->required();
  check->add_option("name", name, "Profile block")->required();

  auto* pay = app.add_subcommand("payoff", "Payoff of a profile");
  pay->add_option("file", file)->required();
  pay->add_option("name", name)->required();

  auto* bisim = app.add_subcommand("bisim", "Bisimilarity of two blocks");
  bisim->add_option("file", file)->required();
  bisim->add_option("name1", name)->required();
  bisim->add_option("name2", name2)->required();

  auto* sum_cmd = app.add_subcommand("sum", "Sum a consistent family of strategies");
  sum_cmd->add_option("file", file)->required();
  sum_cmd->add_option("names", names, "Strategy blocks, optionally AGENT=NAME")->required();
  sum_cmd->add_option("--out", out_path, "Output .gg file")->required();
  sum_cmd->add_option("--name", sum_name, "Name of the resulting profile block");

  auto* nash = app.add_subcommand("nash", "Nash verdict within a deviation depth");
  nash->add_option("file", file)->required();
  nash->add_option("name", name)->required();
  nash->add_option("--depth", depth, "Deviation depth")->required();

  auto* theorem = app.add_subcommand("theorem01", "SPE characterization of the 0,1-game");
  theorem->add_option("--prefix", prefix, "Maximal prefix length")->required();
  theorem->add_option("--period", period, "Maximal period length")
      ->required()
      ->check(CLI::PositiveNumber);
  theorem->add_flag("--lines", lines, "Print one verdict line per word");

  auto* appendix = app.add_subcommand("appendix", "Backward induction on the F and K cuts");
  appendix->add_option("--n", n, "Largest cut")->required()->check(CLI::PositiveNumber);
  appendix->add_flag("--lines", lines, "Print one verdict line per profile");

  auto* escalate = app.add_subcommand("escalate", "Escalation in the 0,1-game");

  auto* unfold_cmd = app.add_subcommand("unfold", "Render a bounded unfolding");
  unfold_cmd->add_option("file", file)->required();
  unfold_cmd->add_option("name", name)->required();
  unfold_cmd->add_option("--depth", depth)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::map<std::string, std::vector<ParsedBlock>> cache;
  try {
    if (check->parsed()) {
      bool v = detail::predicates().at(pred)(detail::as_profile(detail::load(cache, file, name)));
      out << pred << " " << name << " = " << detail::tf(v) << "\n";
      return v ? 0 : 1;
    }
    if (pay->parsed()) {
      StratProf s = detail::as_profile(detail::load(cache, file, name));
      auto outcome = payoff(s);
      out << "payoff " << name << " = ";
      if (outcome.defined()) {
        out << to_string(outcome.payoff()) << "\n";
      } else {
        out << "undefined (cycle:";
        for (NodeRef c : outcome.cycle()) out << " " << s.graph().name(c);
        out << ")\n";
      }
      return 0;
    }
    if (bisim->parsed()) {
      const auto& a = detail::load(cache, file, name);
      const auto& b = detail::load(cache, file, name2);
      bool v = bisimilar(a.graph, b.graph);
      out << "bisim " << name << " " << name2 << " = " << detail::tf(v) << "\n";
      return v ? 0 : 1;
    }
    if (sum_cmd->parsed()) {
      // Members given as AGENT=NAME keep that agent; bare names take the
      // first agent, in order, that the strategy is full for and that is
      // still free.
      StrategyFamily fam;
      std::vector<Strat> unassigned;
      for (const auto& entry : names) {
        auto eq = entry.find('=');
        std::string block = eq == std::string::npos ? entry : entry.substr(eq + 1);
        const auto& b = detail::load(cache, file, block);
        if (b.graph.kind() != GraphKind::strategy) throw Error(block + " is not a strategy");
        if (eq != std::string::npos) {
          if (!fam.emplace(entry.substr(0, eq), Strat(b.graph)).second) {
            throw Error("two strategies for agent " + entry.substr(0, eq));
          }
        } else {
          unassigned.emplace_back(b.graph);
        }
      }
      for (const auto& st : unassigned) {
        bool placed = false;
        for (const Agent& p : st.graph().agents()) {
          if (!fam.contains(p) && is_full(st, p)) {
            fam.emplace(p, st);
            placed = true;
            break;
          }
        }
        if (!placed) throw Error("inconsistent strategies: no free agent for a strategy");
      }
      StratProf s = sum(fam);
      std::ofstream o(out_path, std::ios::binary);
      if (!o) throw Error("cannot write " + out_path);
      o << serialize(s.graph(), sum_name);
      out << "sum " << sum_name << " written to " << out_path << "\n";
      return 0;
    }
    if (nash->parsed()) {
      auto verdict = is_nash(detail::as_profile(detail::load(cache, file, name)),
                             DeviationBudget{depth});
      out << "nash " << name << " = " << to_string(verdict) << "\n";
      return verdict.refuted() ? 1 : 0;
    }
    if (theorem->parsed()) {
      auto report = check_theorem(prefix, period);
      if (lines) {
        for (const auto& l : report.lines) out << l << "\n";
      }
      out << report.summary();
      return report.confirmed() ? 0 : 1;
    }
    if (appendix->parsed()) {
      auto report = check_appendix_prop(n);
      if (lines) {
        for (const auto& l : report.lines) out << l << "\n";
      }
      out << report.summary();
      return report.confirmed() ? 0 : 1;
    }
    if (escalate->parsed()) {
      auto report = check_prop_escal();
      for (std::size_t i = 0; i < report.items.size(); ++i) {
        out << "escalation." << i + 1 << " " << EscalationReport::kStatements[i] << " = "
            << detail::tf(report.items[i]) << "\n";
      }
      bool payroll = payroll_note_check();
      out << "payroll bounded payoffs with escalation = " << detail::tf(payroll) << "\n";
      return report.all() && payroll ? 0 : 1;
    }
    if (unfold_cmd->parsed()) {
      const auto& b = detail::load(cache, file, name);
      out << render(unfold(b.graph, depth));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace infgame::cli

#endif  // INFGAME_TOOLS_CLI_HPP_
