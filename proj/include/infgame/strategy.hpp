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

// Individual strategies and their sum into a strategy profile.

#ifndef INFGAME_STRATEGY_HPP_
#define INFGAME_STRATEGY_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "infgame/core.hpp"
#include "infgame/game_model.hpp"
#include "infgame/termgraph.hpp"

namespace infgame {

using StrategyFamily = std::map<Agent, Strat>;

inline const std::variant<Agent, Choice>& head_of(const TermGraph& g, NodeRef n) {
  return std::get<StrategyNode>(g.label(n)).head;
}

inline bool head_is(const TermGraph& g, NodeRef n, const Agent& p) {
  const auto* a = std::get_if<Agent>(&head_of(g, n));
  return a != nullptr && *a == p;
}

namespace rules {

// Leaves hold; an inner node holds when its head is not p and both children
// hold.
inline auto fullness(const Agent& p) {
  return [p](const TermGraph& g, NodeRef n) -> RuleBody {
    if (g.is_leaf(n)) return holds();
    if (head_is(g, n, p)) return fails();
    return requires_all({g.down(n), g.right(n)});
  };
}

}  // namespace rules

inline PredicateResult fullness(const Strat& st, const Agent& p) {
  return gfp_eval(st.graph(), rules::fullness(p));
}

inline bool is_full(const Strat& st, const Agent& p) { return fullness(st, p).root_verdict; }

// Agent heads stay; choice heads become owned by p.
inline Game st2g(const Strat& st, const Agent& p) {
  return Game(relabel(st.graph(), GraphKind::game, [&](const Node& n) -> NodeLabel {
    const auto& head = std::get<StrategyNode>(n.label).head;
    if (const auto* a = std::get_if<Agent>(&head)) return GameNode{*a};
    return GameNode{p};
  }));
}

// Why a family cannot be summed, or nullopt when it can.
inline std::optional<std::string> consistency_problem(const StrategyFamily& fam) {
  if (fam.empty()) return "empty strategy family";
  // Leaves fix the agent set; a graph without leaves only names the agents
  // appearing in its heads.
  std::optional<std::vector<Agent>> from_leaves;
  std::set<Agent> named;
  for (const auto& [p, st] : fam) {
    const TermGraph& g = st.graph();
    bool has_leaf = std::any_of(g.nodes().begin(), g.nodes().end(),
                                [](const Node& n) { return is_leaf(n.label); });
    if (has_leaf) {
      if (from_leaves && *from_leaves != g.agents()) {
        return "strategies disagree on the agent set";
      }
      from_leaves = g.agents();
    }
    named.insert(g.agents().begin(), g.agents().end());
  }
  std::set<Agent> keys;
  for (const auto& [p, st] : fam) keys.insert(p);
  bool keys_ok = from_leaves ? std::set<Agent>(from_leaves->begin(), from_leaves->end()) == keys
                             : std::includes(keys.begin(), keys.end(), named.begin(), named.end());
  if (!keys_ok) return "family must hold exactly one strategy per agent";
  for (const auto& [p, st] : fam) {
    if (!is_valid_agent_name(p)) return "invalid agent name '" + p + "'";
    if (!is_full(st, p)) return "fullness: strategy of " + p + " is not full for " + p;
  }
  std::optional<Game> common;
  for (const auto& [p, st] : fam) {
    Game g = st2g(st, p);
    if (!common) {
      common = std::move(g);
    } else if (!bisimilar(*common, g)) {
      return "common-game: strategy of " + p + " is over a different game";
    }
  }
  return std::nullopt;
}

inline bool are_consistent(const StrategyFamily& fam) {
  return !consistency_problem(fam).has_value();
}

// Synchronized product of the members, memoized on tuples of member nodes.
// At each tuple exactly one member shows a choice: its agent owns the node.
inline StratProf sum(const StrategyFamily& fam) {
  if (auto problem = consistency_problem(fam)) {
    throw Error("inconsistent strategies: " + *problem);
  }
  std::vector<const Agent*> agents;
  std::vector<const TermGraph*> members;
  for (const auto& [p, st] : fam) {
    agents.push_back(&p);
    members.push_back(&st.graph());
  }
  using Tuple = std::vector<NodeRef>;
  std::map<Tuple, NodeRef> index;
  std::vector<Tuple> tuples;
  GraphBuilder b(GraphKind::profile);
  auto intern = [&](Tuple t) {
    auto [it, fresh] = index.try_emplace(t, static_cast<NodeRef>(tuples.size()));
    if (fresh) {
      tuples.push_back(std::move(t));
      b.reserve();
    }
    return it->second;
  };
  Tuple start;
  for (const auto* g : members) start.push_back(g->root());
  intern(std::move(start));

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const Tuple t = tuples[i];
    const TermGraph& first = *members[0];
    if (first.is_leaf(t[0])) {
      b.define(static_cast<NodeRef>(i), first.label(t[0]));
      continue;
    }
    std::optional<std::size_t> decider;
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (std::holds_alternative<Choice>(head_of(*members[m], t[m]))) {
        if (decider) throw Error("inconsistent strategies: two choices at one position");
        decider = m;
      }
    }
    if (!decider) throw Error("inconsistent strategies: no choice at a position");
    Choice c = std::get<Choice>(head_of(*members[*decider], t[*decider]));
    Tuple down, right;
    for (std::size_t m = 0; m < members.size(); ++m) {
      down.push_back(members[m]->down(t[m]));
      right.push_back(members[m]->right(t[m]));
    }
    NodeRef d = intern(std::move(down));
    NodeRef r = intern(std::move(right));
    b.define(static_cast<NodeRef>(i), ProfileNode{*agents[*decider], c}, d, r);
  }
  return StratProf(b.build(0));
}

// One agent's slice of a profile: its own nodes keep their choice, everybody
// else's nodes show the owner.
inline Strat strategy_of(const StratProf& s, const Agent& p) {
  return Strat(relabel(s.graph(), GraphKind::strategy, [&](const Node& n) -> NodeLabel {
    const auto& [owner, choice] = std::get<ProfileNode>(n.label);
    if (owner == p) return StrategyNode{choice};
    return StrategyNode{owner};
  }));
}

inline StrategyFamily split(const StratProf& s) {
  StrategyFamily fam;
  for (const Agent& p : s.graph().agents()) fam.emplace(p, strategy_of(s, p));
  return fam;
}

}  // namespace infgame

#endif  // INFGAME_STRATEGY_HPP_
