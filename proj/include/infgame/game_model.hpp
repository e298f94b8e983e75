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

// Games and strategy profiles: projection to the underlying game, the
// partial payoff, convergence, strong convergence, PE/SPE and subprofiles.

#ifndef INFGAME_GAME_MODEL_HPP_
#define INFGAME_GAME_MODEL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infgame/core.hpp"
#include "infgame/termgraph.hpp"

namespace infgame {

// A TermGraph whose kind is fixed at compile time.
template <GraphKind Kind>
class KindedGraph {
 public:
  static constexpr GraphKind kind = Kind;

  explicit KindedGraph(TermGraph graph) : graph_(std::move(graph)) {
    if (graph_.kind() != Kind) {
      throw Error("expected a " + std::string(to_string(Kind)) + " graph, got a " +
                  std::string(to_string(graph_.kind())) + " graph");
    }
  }

  const TermGraph& graph() const { return graph_; }
  NodeRef root() const { return graph_.root(); }

 private:
  TermGraph graph_;
};

using Game = KindedGraph<GraphKind::game>;
using StratProf = KindedGraph<GraphKind::profile>;
using Strat = KindedGraph<GraphKind::strategy>;

template <GraphKind K>
bool bisimilar(const KindedGraph<K>& a, const KindedGraph<K>& b) {
  return bisimilar(a.graph(), b.graph());
}

// The same graph rooted elsewhere. Nodes unreachable from the new root are
// dropped.
template <GraphKind K>
KindedGraph<K> rerooted(const KindedGraph<K>& x, NodeRef root) {
  const TermGraph& g = x.graph();
  GraphBuilder b(K);
  for (const Node& n : g.nodes()) b.inner(n.label, n.down, n.right, n.name);
  return KindedGraph<K>(b.build_pruned(root));
}

inline const ProfileNode& profile_label(const TermGraph& g, NodeRef n) {
  return std::get<ProfileNode>(g.label(n));
}

// Follow the choices: d goes down, r goes right.
inline NodeRef chosen_child(const TermGraph& g, NodeRef n) {
  return g.child(n, profile_label(g, n).choice);
}

inline Game game_of(const StratProf& s) {
  return Game(relabel(s.graph(), GraphKind::game, [](const Node& n) -> NodeLabel {
    return GameNode{std::get<ProfileNode>(n.label).owner};
  }));
}

// Payoff of a profile: Defined when the chosen path reaches a leaf,
// Undefined with the node cycle the path runs into otherwise.
struct PayoffOutcome {
  std::variant<PayoffFn, std::vector<NodeRef>> value;

  bool defined() const { return std::holds_alternative<PayoffFn>(value); }
  const PayoffFn& payoff() const {
    if (!defined()) throw Error("payoff undefined");
    return std::get<PayoffFn>(value);
  }
  const std::vector<NodeRef>& cycle() const { return std::get<std::vector<NodeRef>>(value); }
};

inline PayoffOutcome payoff_at(const StratProf& s, NodeRef from) {
  const TermGraph& g = s.graph();
  std::vector<std::size_t> position(g.size(), static_cast<std::size_t>(-1));
  std::vector<NodeRef> path;
  NodeRef n = from;
  while (!g.is_leaf(n)) {
    if (position[n] != static_cast<std::size_t>(-1)) {
      return PayoffOutcome{std::vector<NodeRef>(path.begin() + position[n], path.end())};
    }
    position[n] = path.size();
    path.push_back(n);
    n = chosen_child(g, n);
  }
  return PayoffOutcome{std::get<Leaf>(g.label(n)).payoff};
}

inline PayoffOutcome payoff(const StratProf& s) { return payoff_at(s, s.root()); }

// The payoff at every node, nullopt where it is undefined.
inline std::vector<std::optional<PayoffFn>> payoffs(const StratProf& s) {
  const TermGraph& g = s.graph();
  // The chosen-child relation is functional: resolve each node's eventual
  // leaf once, marking nodes on paths that never reach one.
  enum class Mark : std::uint8_t { unknown, visiting, done };
  std::vector<Mark> mark(g.size(), Mark::unknown);
  std::vector<std::optional<PayoffFn>> out(g.size());
  for (NodeRef start = 0; start < g.size(); ++start) {
    std::vector<NodeRef> path;
    NodeRef n = start;
    while (mark[n] == Mark::unknown && !g.is_leaf(n)) {
      mark[n] = Mark::visiting;
      path.push_back(n);
      n = chosen_child(g, n);
    }
    std::optional<PayoffFn> result;
    if (g.is_leaf(n)) {
      result = std::get<Leaf>(g.label(n)).payoff;
      mark[n] = Mark::done;
      out[n] = result;
    } else if (mark[n] == Mark::done) {
      result = out[n];
    }  // else: ran into the current path, a cycle
    for (NodeRef p : path) {
      out[p] = result;
      mark[p] = Mark::done;
    }
  }
  return out;
}

namespace rules {

// Leaves hold; an inner node holds when its chosen child does.
inline RuleBody convergence(const TermGraph& g, NodeRef n) {
  if (g.is_leaf(n)) return holds();
  return requires_all({chosen_child(g, n)});
}

// Leaves hold; an inner node holds when it converges and both children hold.
inline auto strong_convergence(const PredicateResult& conv) {
  return [&conv](const TermGraph& g, NodeRef n) -> RuleBody {
    if (g.is_leaf(n)) return holds();
    if (!conv.at(n)) return fails();
    return requires_all({g.down(n), g.right(n)});
  };
}

}  // namespace rules

// Convergence, a least fixpoint.
inline PredicateResult converges(const StratProf& s) {
  return lfp_eval(s.graph(), rules::convergence);
}

// Strong convergence, a greatest fixpoint.
inline PredicateResult strongly_converges(const StratProf& s) {
  auto conv = converges(s);
  return gfp_eval(s.graph(), rules::strong_convergence(conv));
}

// PE: strongly convergent and the chosen child is at least as good for the
// owner as the other one. Leaves satisfy PE.
inline PredicateResult is_pe(const StratProf& s) {
  const TermGraph& g = s.graph();
  auto sconv = strongly_converges(s);
  auto values = payoffs(s);
  PredicateResult out{std::vector<bool>(g.size(), false), false};
  for (NodeRef n = 0; n < g.size(); ++n) {
    if (g.is_leaf(n)) {
      out.valuation[n] = true;
      continue;
    }
    if (!sconv.at(n)) continue;
    const auto& [owner, choice] = profile_label(g, n);
    const auto& taken = values[g.child(n, choice)];
    const auto& declined = values[g.child(n, other(choice))];
    out.valuation[n] = taken->at(owner) >= declined->at(owner);
  }
  out.root_verdict = out.valuation[g.root()];
  return out;
}

// SPE = always PE.
inline PredicateResult spe_valuation(const StratProf& s) {
  return always(s.graph(), is_pe(s));
}

inline bool is_spe(const StratProf& s) { return spe_valuation(s).root_verdict; }

// sub is a subprofile of s when a node reachable from s's root is bisimilar
// to sub's root.
inline bool is_subprofile(const StratProf& sub, const StratProf& s) {
  for (NodeRef n : reachable(s.graph(), s.root())) {
    if (bisimilar(sub.graph(), sub.root(), s.graph(), n)) return true;
  }
  return false;
}

}  // namespace infgame

#endif  // INFGAME_GAME_MODEL_HPP_
