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

// Nash equilibria through the convertibility relation, and backward
// induction on finite profiles.

#ifndef INFGAME_EQUILIBRIUM_HPP_
#define INFGAME_EQUILIBRIUM_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "infgame/core.hpp"
#include "infgame/game_model.hpp"
#include "infgame/termgraph.hpp"

namespace infgame {

// s1 ⊢p⊣ s2: the least relation containing bisimilar pairs and closed under
// rebuilding a node with related children, where the choice may change only
// if p owns the node. Decided on the product of node pairs reachable from
// the two roots.
inline bool convertible(const StratProf& s1, const StratProf& s2, const Agent& p) {
  if (!bisimilar(game_of(s1), game_of(s2))) throw Error("profiles of different games");
  const TermGraph& g1 = s1.graph();
  const TermGraph& g2 = s2.graph();

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  auto key = [](NodeRef a, NodeRef b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  auto intern = [&](NodeRef a, NodeRef b) {
    auto [it, fresh] = index.try_emplace(key(a, b), pairs.size());
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(s1.root(), s2.root());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (g1.is_leaf(a) || g2.is_leaf(b)) continue;
    intern(g1.down(a), g2.down(b));
    intern(g1.right(a), g2.right(b));
  }
  auto children = [&](std::size_t i) -> std::vector<std::size_t> {
    auto [a, b] = pairs[i];
    return {index.at(key(g1.down(a), g2.down(b))), index.at(key(g1.right(a), g2.right(b)))};
  };

  auto bisim = solve_fixpoint(
      pairs.size(),
      [&](std::size_t i) -> RuleBody {
        auto [a, b] = pairs[i];
        if (g1.label(a) != g2.label(b)) return fails();
        if (g1.is_leaf(a)) return holds();
        return requires_all(children(i));
      },
      FixpointKind::greatest);

  auto conv = solve_fixpoint(
      pairs.size(),
      [&](std::size_t i) -> RuleBody {
        if (bisim[i]) return holds();
        auto [a, b] = pairs[i];
        if (g1.is_leaf(a) || g2.is_leaf(b)) return fails();
        const auto& la = profile_label(g1, a);
        const auto& lb = profile_label(g2, b);
        if (la.owner != lb.owner) return fails();
        if (la.owner != p && la.choice != lb.choice) return fails();
        return requires_all(children(i));
      },
      FixpointKind::least);
  return conv[0];
}

// How far into the unfolding a deviator may change choices.
struct DeviationBudget {
  std::size_t depth = 0;
};

namespace detail {

// The unfolding of s down to `depth` as explicit tree positions, with the
// original graph grafted below. Positions are numbered after the original
// nodes; owned_positions lists those owned by `p`.
struct DeviationFrame {
  std::vector<Node> nodes;   // original nodes followed by positions
  NodeRef root = 0;
  std::vector<NodeRef> owned_positions;
};

inline DeviationFrame deviation_frame(const StratProf& s, const Agent& p,
                                      std::size_t depth) {
  const TermGraph& g = s.graph();
  DeviationFrame f;
  f.nodes = g.nodes();
  std::function<NodeRef(NodeRef, std::size_t)> copy = [&](NodeRef n,
                                                          std::size_t t) -> NodeRef {
    if (t >= depth || g.is_leaf(n)) return n;
    NodeRef pos = static_cast<NodeRef>(f.nodes.size());
    f.nodes.push_back(Node{g.label(n), kNoChild, kNoChild,
                           g.name(n) + "@" + std::to_string(pos - g.size())});
    if (profile_label(g, n).owner == p) f.owned_positions.push_back(pos);
    NodeRef d = copy(g.down(n), t + 1);
    NodeRef r = copy(g.right(n), t + 1);
    f.nodes[pos].down = d;
    f.nodes[pos].right = r;
    return pos;
  };
  f.root = copy(g.root(), 0);
  return f;
}

inline StratProf frame_profile(const DeviationFrame& f) {
  GraphBuilder b(GraphKind::profile);
  for (const Node& n : f.nodes) b.inner(n.label, n.down, n.right, n.name);
  return StratProf(b.build_pruned(f.root));
}

}  // namespace detail

inline constexpr std::size_t kMaxDeviationPositions = 20;

// Every profile obtained from s by reassigning p's choices at positions of
// the unfolding shallower than b.depth, keeping the original tails. Includes
// s itself; duplicate-free up to bisimilarity.
inline std::vector<StratProf> enumerate_deviations(const StratProf& s, const Agent& p,
                                                   DeviationBudget b) {
  auto frame = detail::deviation_frame(s, p, b.depth);
  const std::size_t k = frame.owned_positions.size();
  if (k > kMaxDeviationPositions) throw Error("deviation space too large");
  std::vector<StratProf> out;
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) {
      auto& label = std::get<ProfileNode>(frame.nodes[frame.owned_positions[i]].label);
      label.choice = (mask >> i) & 1 ? Choice::r : Choice::d;
    }
    StratProf candidate = detail::frame_profile(frame);
    if (seen.insert(canonical_form(candidate.graph())).second) {
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

struct NashVerdict {
  struct Nash {};
  struct NoImprovingDeviationUpTo {
    std::size_t depth;
  };
  struct Refuted {
    StratProf witness;
    Agent agent;
    Rational before;
    Rational after;
  };
  std::variant<Nash, NoImprovingDeviationUpTo, Refuted> value;

  bool is_nash() const { return std::holds_alternative<Nash>(value); }
  bool refuted() const { return std::holds_alternative<Refuted>(value); }
};

// "nash", "no-improving-deviation(depth=3)", "refuted(agent=A, gain=0->1)"
inline std::string to_string(const NashVerdict& v) {
  if (v.is_nash()) return "nash";
  if (const auto* n = std::get_if<NashVerdict::NoImprovingDeviationUpTo>(&v.value)) {
    return "no-improving-deviation(depth=" + std::to_string(n->depth) + ")";
  }
  const auto& r = std::get<NashVerdict::Refuted>(v.value);
  return "refuted(agent=" + r.agent + ", gain=" + to_string(r.before) + "->" +
         to_string(r.after) + ")";
}

// Searches p's deviations within the budget by best response: at p's
// positions take the better child, elsewhere follow the profile, below the
// budget keep the original payoff. A deviation whose payoff is undefined
// never refutes. Exact (Nash) when s is finite and the budget covers its
// height.
inline NashVerdict is_nash(const StratProf& s, DeviationBudget b) {
  const TermGraph& g = s.graph();
  auto outcome = payoff(s);
  if (!outcome.defined()) throw Error("payoff undefined at root");
  const PayoffFn& current = outcome.payoff();
  auto tails = payoffs(s);

  for (const Agent& p : g.agents()) {
    // Best reachable payoff vector for p from (node, depth), memoized; the
    // best choice at p's nodes is recorded for the witness.
    std::map<std::pair<NodeRef, std::size_t>, std::optional<PayoffFn>> best;
    std::map<std::pair<NodeRef, std::size_t>, Choice> pick;
    std::function<std::optional<PayoffFn>(NodeRef, std::size_t)> go =
        [&](NodeRef n, std::size_t t) -> std::optional<PayoffFn> {
      if (g.is_leaf(n) || t >= b.depth) return tails[n];
      auto key = std::pair{n, t};
      if (auto it = best.find(key); it != best.end()) return it->second;
      const auto& [owner, choice] = profile_label(g, n);
      std::optional<PayoffFn> result;
      if (owner == p) {
        Choice chosen = choice;
        result = go(g.child(n, choice), t + 1);
        auto alt = go(g.child(n, other(choice)), t + 1);
        if (alt && (!result || alt->at(p) > result->at(p))) {
          result = alt;
          chosen = other(choice);
        }
        pick[key] = chosen;
      } else {
        result = go(g.child(n, choice), t + 1);
      }
      best[key] = result;
      return result;
    };
    auto top = go(g.root(), 0);
    if (!top || top->at(p) <= current.at(p)) continue;

    // Witness: the layered unfolding (node, depth) with the recorded picks.
    GraphBuilder wb(GraphKind::profile);
    for (const Node& n : g.nodes()) wb.inner(n.label, n.down, n.right, n.name);
    std::map<std::pair<NodeRef, std::size_t>, NodeRef> layer;
    std::function<NodeRef(NodeRef, std::size_t)> build = [&](NodeRef n,
                                                             std::size_t t) -> NodeRef {
      if (g.is_leaf(n) || t >= b.depth) return n;
      auto key = std::pair{n, t};
      if (auto it = layer.find(key); it != layer.end()) return it->second;
      NodeRef pos = wb.reserve(g.name(n) + "@" + std::to_string(t));
      layer[key] = pos;
      auto label = profile_label(g, n);
      if (auto it = pick.find(key); it != pick.end()) label.choice = it->second;
      NodeRef d = build(g.down(n), t + 1);
      NodeRef r = build(g.right(n), t + 1);
      wb.define(pos, label, d, r);
      return pos;
    };
    NodeRef root = build(g.root(), 0);
    return NashVerdict{NashVerdict::Refuted{StratProf(wb.build_pruned(root)), p,
                                            current.at(p), top->at(p)}};
  }
  if (is_acyclic(g) && b.depth >= height(g)) return NashVerdict{NashVerdict::Nash{}};
  return NashVerdict{NashVerdict::NoImprovingDeviationUpTo{b.depth}};
}

// Backward induction on a finite profile, by structural recursion: both
// children satisfy BI and the chosen child is at least as good for the owner.
inline PredicateResult bi_valuation(const StratProf& s) {
  const TermGraph& g = s.graph();
  if (!is_acyclic(g)) throw Error("BI requires finite profile");
  auto values = payoffs(s);
  std::vector<std::optional<bool>> memo(g.size());
  std::function<bool(NodeRef)> bi = [&](NodeRef n) -> bool {
    if (memo[n]) return *memo[n];
    bool v = true;
    if (!g.is_leaf(n)) {
      const auto& [owner, choice] = profile_label(g, n);
      bool left_ok = bi(g.down(n));
      bool right_ok = bi(g.right(n));
      v = left_ok && right_ok &&
          values[g.child(n, choice)]->at(owner) >= values[g.child(n, other(choice))]->at(owner);
    }
    memo[n] = v;
    return v;
  };
  PredicateResult out{std::vector<bool>(g.size()), false};
  for (NodeRef n = 0; n < g.size(); ++n) out.valuation[n] = bi(n);
  out.root_verdict = out.valuation[g.root()];
  return out;
}

inline bool is_bi(const StratProf& s) { return bi_valuation(s).root_verdict; }

}  // namespace infgame

#endif  // INFGAME_EQUILIBRIUM_HPP_
