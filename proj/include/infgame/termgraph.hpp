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

// Finitely presented cyclic term graphs.
//
// A TermGraph is an equation system: every node carries a label and, unless
// it is a leaf, a `down` and a `right` child. The same structure represents
// games, strategy profiles and individual strategies; the graph kind fixes
// which inner labels are allowed. Cycles are permitted, so a graph denotes a
// possibly infinite but regular tree.

#ifndef INFGAME_TERMGRAPH_HPP_
#define INFGAME_TERMGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "infgame/core.hpp"

namespace infgame {

using NodeRef = std::uint32_t;
inline constexpr NodeRef kNoChild = std::numeric_limits<NodeRef>::max();

enum class GraphKind : std::uint8_t { game, profile, strategy };

inline constexpr std::string_view to_string(GraphKind k) {
  switch (k) {
    case GraphKind::game: return "game";
    case GraphKind::profile: return "profile";
    case GraphKind::strategy: return "strategy";
  }
  return "?";
}

struct Leaf {
  PayoffFn payoff;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};
struct GameNode {
  Agent owner;
  friend bool operator==(const GameNode&, const GameNode&) = default;
};
struct ProfileNode {
  Agent owner;
  Choice choice;
  friend bool operator==(const ProfileNode&, const ProfileNode&) = default;
};
// Head of a strategy node: the owning agent when somebody else decides here,
// or the strategy's own choice.
struct StrategyNode {
  std::variant<Agent, Choice> head;
  friend bool operator==(const StrategyNode&, const StrategyNode&) = default;
};

using NodeLabel = std::variant<Leaf, GameNode, ProfileNode, StrategyNode>;

inline bool is_leaf(const NodeLabel& l) { return std::holds_alternative<Leaf>(l); }

inline std::optional<GraphKind> kind_of(const NodeLabel& l) {
  if (std::holds_alternative<GameNode>(l)) return GraphKind::game;
  if (std::holds_alternative<ProfileNode>(l)) return GraphKind::profile;
  if (std::holds_alternative<StrategyNode>(l)) return GraphKind::strategy;
  return std::nullopt;
}

inline std::string to_string(const NodeLabel& l) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          return "leaf" + to_string(x.payoff);
        } else if constexpr (std::is_same_v<T, GameNode>) {
          return x.owner;
        } else if constexpr (std::is_same_v<T, ProfileNode>) {
          return x.owner + " -> " + std::string(to_string(x.choice));
        } else {
          if (const auto* a = std::get_if<Agent>(&x.head)) return *a;
          return std::string(to_string(std::get<Choice>(x.head)));
        }
      },
      l);
}

struct Node {
  NodeLabel label;
  NodeRef down = kNoChild;
  NodeRef right = kNoChild;
  std::string name;
};

class TermGraph {
 public:
  // Validates and takes ownership of `nodes`. Every child must resolve, inner
  // labels must match `kind`, and every node must be reachable from `root`.
  // Unnamed nodes are named "n<index>".
  static TermGraph make(GraphKind kind, std::vector<Node> nodes, NodeRef root) {
    TermGraph g;
    g.kind_ = kind;
    g.nodes_ = std::move(nodes);
    g.root_ = root;
    g.validate();
    return g;
  }

  GraphKind kind() const { return kind_; }
  NodeRef root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeRef n) const { return n < nodes_.size(); }

  const Node& node(NodeRef n) const {
    if (!contains(n)) throw Error("dangling reference");
    return nodes_[n];
  }
  const NodeLabel& label(NodeRef n) const { return node(n).label; }
  bool is_leaf(NodeRef n) const { return infgame::is_leaf(label(n)); }
  NodeRef down(NodeRef n) const { return node(n).down; }
  NodeRef right(NodeRef n) const { return node(n).right; }
  NodeRef child(NodeRef n, Choice c) const {
    return c == Choice::d ? down(n) : right(n);
  }
  const std::string& name(NodeRef n) const { return node(n).name; }
  std::optional<NodeRef> find(std::string_view name) const {
    for (NodeRef i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].name == name) return i;
    }
    return std::nullopt;
  }

  // Sorted agent set: the common domain of all leaf payoffs, or the set of
  // owners when the graph has no leaves.
  const std::vector<Agent>& agents() const { return agents_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  TermGraph() = default;

  void validate() {
    if (!contains(root_)) throw Error("dangling reference");
    std::set<std::string> names;
    std::optional<std::vector<Agent>> leaf_domain;
    std::set<Agent> named_agents;
    for (NodeRef i = 0; i < nodes_.size(); ++i) {
      Node& n = nodes_[i];
      if (n.name.empty()) n.name = "n" + std::to_string(i);
      if (!names.insert(n.name).second) throw Error("duplicate node name " + n.name);
      if (const auto* leaf = std::get_if<Leaf>(&n.label)) {
        if (n.down != kNoChild || n.right != kNoChild) {
          throw Error("leaf " + n.name + " has children");
        }
        auto domain = leaf->payoff.agents();
        if (domain.empty()) throw Error("leaf " + n.name + " has an empty payoff");
        if (leaf_domain && *leaf_domain != domain) {
          throw Error("leaf " + n.name + " has a payoff domain different from other leaves");
        }
        leaf_domain = std::move(domain);
        continue;
      }
      if (kind_of(n.label) != kind_) {
        throw Error("kind violation at " + n.name + ": label does not belong to a " +
                    std::string(to_string(kind_)) + " graph");
      }
      if (!contains(n.down) || !contains(n.right)) throw Error("dangling reference");
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, GameNode> || std::is_same_v<T, ProfileNode>) {
              named_agents.insert(x.owner);
            } else if constexpr (std::is_same_v<T, StrategyNode>) {
              if (const auto* a = std::get_if<Agent>(&x.head)) named_agents.insert(*a);
            }
          },
          n.label);
    }
    for (const auto& a : named_agents) {
      if (!is_valid_agent_name(a)) throw Error("invalid agent name '" + a + "'");
    }
    if (leaf_domain) {
      for (const auto& a : named_agents) {
        if (!std::binary_search(leaf_domain->begin(), leaf_domain->end(), a)) {
          throw Error("agent " + a + " owns a node but has no payoff");
        }
      }
      agents_ = *leaf_domain;
    } else {
      agents_.assign(named_agents.begin(), named_agents.end());
    }
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<NodeRef> stack{root_};
    seen[root_] = true;
    while (!stack.empty()) {
      NodeRef n = stack.back();
      stack.pop_back();
      if (infgame::is_leaf(nodes_[n].label)) continue;
      for (NodeRef c : {nodes_[n].down, nodes_[n].right}) {
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    for (NodeRef i = 0; i < nodes_.size(); ++i) {
      if (!seen[i]) throw Error("unreachable node " + nodes_[i].name);
    }
  }

  GraphKind kind_ = GraphKind::game;
  std::vector<Node> nodes_;
  NodeRef root_ = 0;
  std::vector<Agent> agents_;
};

// Incremental construction, including forward references for cycles:
// reserve() a node, refer to it, define() it later.
class GraphBuilder {
 public:
  explicit GraphBuilder(GraphKind kind) : kind_(kind) {}

  NodeRef reserve(std::string name = {}) {
    nodes_.push_back(Node{Leaf{}, kNoChild, kNoChild, std::move(name)});
    defined_.push_back(false);
    return static_cast<NodeRef>(nodes_.size() - 1);
  }
  void define(NodeRef ref, NodeLabel label, NodeRef down = kNoChild,
              NodeRef right = kNoChild) {
    if (ref >= nodes_.size()) throw Error("dangling reference");
    if (defined_[ref]) throw Error("node " + describe(ref) + " defined twice");
    nodes_[ref].label = std::move(label);
    nodes_[ref].down = down;
    nodes_[ref].right = right;
    defined_[ref] = true;
  }

  NodeRef leaf(PayoffFn payoff, std::string name = {}) {
    NodeRef n = reserve(std::move(name));
    define(n, Leaf{std::move(payoff)});
    return n;
  }
  NodeRef inner(NodeLabel label, NodeRef down, NodeRef right, std::string name = {}) {
    NodeRef n = reserve(std::move(name));
    define(n, std::move(label), down, right);
    return n;
  }
  NodeRef game(const Agent& owner, NodeRef down, NodeRef right, std::string name = {}) {
    return inner(GameNode{owner}, down, right, std::move(name));
  }
  NodeRef profile(const Agent& owner, Choice c, NodeRef down, NodeRef right,
                  std::string name = {}) {
    return inner(ProfileNode{owner, c}, down, right, std::move(name));
  }
  NodeRef strategy(std::variant<Agent, Choice> head, NodeRef down, NodeRef right,
                   std::string name = {}) {
    return inner(StrategyNode{std::move(head)}, down, right, std::move(name));
  }

  std::size_t size() const { return nodes_.size(); }

  TermGraph build(NodeRef root) const {
    check_defined();
    return TermGraph::make(kind_, nodes_, root);
  }

  // Like build(), but silently drops nodes not reachable from `root`.
  TermGraph build_pruned(NodeRef root) const {
    check_defined();
    if (root >= nodes_.size()) throw Error("dangling reference");
    std::vector<NodeRef> remap(nodes_.size(), kNoChild);
    std::vector<NodeRef> order;
    std::vector<NodeRef> stack{root};
    while (!stack.empty()) {
      NodeRef n = stack.back();
      stack.pop_back();
      if (remap[n] != kNoChild) continue;
      remap[n] = static_cast<NodeRef>(order.size());
      order.push_back(n);
      if (is_leaf(nodes_[n].label)) continue;
      for (NodeRef c : {nodes_[n].right, nodes_[n].down}) {
        if (c >= nodes_.size()) throw Error("dangling reference");
        if (remap[c] == kNoChild) stack.push_back(c);
      }
    }
    std::vector<Node> kept;
    kept.reserve(order.size());
    for (NodeRef old : order) {
      Node n = nodes_[old];
      if (!is_leaf(n.label)) {
        n.down = remap[n.down];
        n.right = remap[n.right];
      }
      kept.push_back(std::move(n));
    }
    return TermGraph::make(kind_, std::move(kept), 0);
  }

 private:
  std::string describe(NodeRef ref) const {
    return nodes_[ref].name.empty() ? "#" + std::to_string(ref) : nodes_[ref].name;
  }
  void check_defined() const {
    for (NodeRef i = 0; i < nodes_.size(); ++i) {
      if (!defined_[i]) throw Error("node " + describe(i) + " is never defined");
    }
  }

  GraphKind kind_;
  std::vector<Node> nodes_;
  std::vector<bool> defined_;
};

// Same shape, new labels. `relabel_fn` maps each inner node, given as
// (Node) or (Node, NodeRef), to its new label; leaves are copied unchanged.
template <typename RelabelFn>
TermGraph relabel(const TermGraph& g, GraphKind kind, RelabelFn&& relabel_fn) {
  std::vector<Node> nodes = g.nodes();
  for (NodeRef i = 0; i < nodes.size(); ++i) {
    Node& n = nodes[i];
    if (is_leaf(n.label)) continue;
    if constexpr (std::is_invocable_v<RelabelFn, const Node&, NodeRef>) {
      n.label = relabel_fn(std::as_const(n), i);
    } else {
      n.label = relabel_fn(std::as_const(n));
    }
  }
  return TermGraph::make(kind, std::move(nodes), g.root());
}

// Nodes reachable from `from`, including it: depth first, down before right.
inline std::vector<NodeRef> reachable(const TermGraph& g, NodeRef from) {
  if (!g.contains(from)) throw Error("dangling reference");
  std::vector<NodeRef> order;
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeRef> stack{from};
  while (!stack.empty()) {
    NodeRef n = stack.back();
    stack.pop_back();
    if (seen[n]) continue;
    seen[n] = true;
    order.push_back(n);
    if (g.is_leaf(n)) continue;
    if (!seen[g.right(n)]) stack.push_back(g.right(n));
    if (!seen[g.down(n)]) stack.push_back(g.down(n));
  }
  return order;
}

inline bool is_acyclic(const TermGraph& g) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<std::uint8_t> state(g.size(), 0);
  std::vector<std::pair<NodeRef, int>> stack{{g.root(), 0}};
  state[g.root()] = 1;
  while (!stack.empty()) {
    auto& [n, next] = stack.back();
    if (g.is_leaf(n) || next == 2) {
      state[n] = 2;
      stack.pop_back();
      continue;
    }
    NodeRef c = next++ == 0 ? g.down(n) : g.right(n);
    if (state[c] == 1) return false;
    if (state[c] == 0) {
      state[c] = 1;
      stack.emplace_back(c, 0);
    }
  }
  return true;
}

// Longest root-to-leaf path, in edges. Requires an acyclic graph.
inline std::size_t height(const TermGraph& g) {
  if (!is_acyclic(g)) throw Error("height of a cyclic graph is infinite");
  std::vector<std::optional<std::size_t>> memo(g.size());
  std::function<std::size_t(NodeRef)> go = [&](NodeRef n) -> std::size_t {
    if (memo[n]) return *memo[n];
    std::size_t h = g.is_leaf(n) ? 0 : 1 + std::max(go(g.down(n)), go(g.right(n)));
    memo[n] = h;
    return h;
  };
  return go(g.root());
}

// ---------------------------------------------------------------------------
// Bounded unfolding

struct UnfoldedTree {
  std::optional<NodeLabel> label;  // nullopt marks a cut
  NodeRef origin = kNoChild;
  std::vector<UnfoldedTree> children;  // empty, or {down, right}

  bool is_cut() const { return !label.has_value(); }

  // Structural equality; `origin` is presentation detail and ignored.
  friend bool operator==(const UnfoldedTree& a, const UnfoldedTree& b) {
    return a.label == b.label && a.children == b.children;
  }
};

// Nodes at tree depth < `depth` have their children expanded; children of
// an inner node at depth `depth` are cut.
inline UnfoldedTree unfold(const TermGraph& g, NodeRef from, std::size_t depth) {
  UnfoldedTree t{g.label(from), from, {}};
  if (g.is_leaf(from)) return t;
  t.children.reserve(2);
  for (NodeRef c : {g.down(from), g.right(from)}) {
    if (depth == 0) {
      t.children.push_back(UnfoldedTree{std::nullopt, c, {}});
    } else {
      t.children.push_back(unfold(g, c, depth - 1));
    }
  }
  return t;
}
inline UnfoldedTree unfold(const TermGraph& g, std::size_t depth) {
  return unfold(g, g.root(), depth);
}

inline std::size_t count_nodes(const UnfoldedTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += count_nodes(c);
  return n;
}

// Indented ASCII rendering, one node per line.
inline std::string render(const UnfoldedTree& t) {
  std::string out;
  std::function<void(const UnfoldedTree&, const std::string&, std::size_t)> go =
      [&](const UnfoldedTree& x, const std::string& edge, std::size_t indent) {
        out.append(indent * 2, ' ');
        out += edge;
        out += x.is_cut() ? std::string("...") : to_string(*x.label);
        out += '\n';
        if (x.children.size() == 2) {
          go(x.children[0], "d: ", indent + 1);
          go(x.children[1], "r: ", indent + 1);
        }
      };
  go(t, "", 0);
  return out;
}

// ---------------------------------------------------------------------------
// Fixpoint engine
//
// A predicate over a finite set of states is defined by one rule body per
// state: a disjunction of clauses, each clause a conjunction of other states.
// Bodies can only mention states positively, so every rule expressible here
// is monotone and both extremal fixpoints exist.

struct Clause {
  std::vector<std::size_t> premises;
};
using RuleBody = std::vector<Clause>;

inline RuleBody holds() { return {Clause{}}; }
inline RuleBody fails() { return {}; }
inline RuleBody requires_all(std::vector<std::size_t> premises) {
  return {Clause{std::move(premises)}};
}

enum class FixpointKind : std::uint8_t { least, greatest };

// Worklist iteration. Least: start all-false and set a state when one of its
// clauses is satisfied. Greatest: start all-true and clear a state when none
// is. States are first visited in index order and revisited FIFO when a
// premise changes.
template <typename BodyFn>
std::vector<bool> solve_fixpoint(std::size_t n_states, BodyFn&& body_of,
                                 FixpointKind kind) {
  std::vector<RuleBody> bodies;
  bodies.reserve(n_states);
  for (std::size_t s = 0; s < n_states; ++s) bodies.push_back(body_of(s));

  std::vector<std::vector<std::size_t>> dependents(n_states);
  for (std::size_t s = 0; s < n_states; ++s) {
    for (const auto& clause : bodies[s]) {
      for (std::size_t p : clause.premises) {
        if (p >= n_states) throw Error("rule mentions an unknown state");
        dependents[p].push_back(s);
      }
    }
  }

  const bool initial = kind == FixpointKind::greatest;
  std::vector<bool> value(n_states, initial);
  auto satisfied = [&](std::size_t s) {
    return std::any_of(bodies[s].begin(), bodies[s].end(), [&](const Clause& c) {
      return std::all_of(c.premises.begin(), c.premises.end(),
                         [&](std::size_t p) { return static_cast<bool>(value[p]); });
    });
  };

  std::deque<std::size_t> work;
  std::vector<bool> queued(n_states, true);
  for (std::size_t s = 0; s < n_states; ++s) work.push_back(s);
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    queued[s] = false;
    if (value[s] != initial || satisfied(s) == initial) continue;
    value[s] = !initial;
    for (std::size_t d : dependents[s]) {
      if (!queued[d] && value[d] == initial) {
        queued[d] = true;
        work.push_back(d);
      }
    }
  }
  return value;
}

struct PredicateResult {
  std::vector<bool> valuation;  // indexed by NodeRef
  bool root_verdict = false;

  bool at(NodeRef n) const {
    if (n >= valuation.size()) throw Error("dangling reference");
    return valuation[n];
  }
  friend bool operator==(const PredicateResult&, const PredicateResult&) = default;
};

// `rule(g, n)` returns the body for node n, with NodeRefs as premises.
template <typename Rule>
PredicateResult node_fixpoint(const TermGraph& g, Rule&& rule, FixpointKind kind) {
  auto value = solve_fixpoint(
      g.size(), [&](std::size_t n) { return rule(g, static_cast<NodeRef>(n)); }, kind);
  bool root = value[g.root()];
  return PredicateResult{std::move(value), root};
}

template <typename Rule>
PredicateResult lfp_eval(const TermGraph& g, Rule&& rule) {
  return node_fixpoint(g, std::forward<Rule>(rule), FixpointKind::least);
}

template <typename Rule>
PredicateResult gfp_eval(const TermGraph& g, Rule&& rule) {
  return node_fixpoint(g, std::forward<Rule>(rule), FixpointKind::greatest);
}

namespace rules {

// Box modality: local(n) holds and, at inner nodes, at both children.
template <typename LocalPredicate>
auto always(LocalPredicate local) {
  return [local = std::move(local)](const TermGraph& g, NodeRef n) -> RuleBody {
    if (!local(n)) return fails();
    if (g.is_leaf(n)) return holds();
    return requires_all({g.down(n), g.right(n)});
  };
}

}  // namespace rules

// Greatest fixpoint of the box rule.
template <typename LocalPredicate>
  requires std::is_invocable_r_v<bool, LocalPredicate, NodeRef>
PredicateResult always(const TermGraph& g, LocalPredicate&& local) {
  return gfp_eval(g, rules::always(std::ref(local)));
}

inline PredicateResult always(const TermGraph& g, const PredicateResult& local) {
  return always(g, [&](NodeRef n) { return local.at(n); });
}

// ---------------------------------------------------------------------------
// Bisimilarity

inline bool same_label(const NodeLabel& a, const NodeLabel& b) { return a == b; }

// Greatest relation on the synchronized product of nodes reachable from
// (n1, n2) in which related nodes carry equal labels and related children.
inline bool bisimilar(const TermGraph& g1, NodeRef n1, const TermGraph& g2, NodeRef n2) {
  if (g1.kind() != g2.kind()) throw Error("incomparable kinds");
  if (!g1.contains(n1) || !g2.contains(n2)) throw Error("dangling reference");

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<NodeRef, NodeRef>> pairs;
  auto key = [](NodeRef a, NodeRef b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  auto intern = [&](NodeRef a, NodeRef b) {
    auto [it, fresh] = index.try_emplace(key(a, b), pairs.size());
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(n1, n2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (!same_label(g1.label(a), g2.label(b)) || g1.is_leaf(a)) continue;
    intern(g1.down(a), g2.down(b));
    intern(g1.right(a), g2.right(b));
  }

  auto related = solve_fixpoint(
      pairs.size(),
      [&](std::size_t i) -> RuleBody {
        auto [a, b] = pairs[i];
        if (!same_label(g1.label(a), g2.label(b))) return fails();
        if (g1.is_leaf(a)) return holds();
        return requires_all({index.at(key(g1.down(a), g2.down(b))),
                             index.at(key(g1.right(a), g2.right(b)))});
      },
      FixpointKind::greatest);
  return related[0];
}

inline bool bisimilar(const TermGraph& g1, const TermGraph& g2) {
  return bisimilar(g1, g1.root(), g2, g2.root());
}

// Bisimulation classes of the nodes of one graph, by signature refinement:
// start from label classes and split by the classes of the children until
// stable. Class ids are dense and assigned in first-occurrence order.
inline std::vector<std::size_t> bisimulation_classes(const TermGraph& g) {
  std::vector<std::size_t> cls(g.size());
  {
    std::map<std::string, std::size_t> by_label;
    for (NodeRef n = 0; n < g.size(); ++n) {
      cls[n] = by_label.try_emplace(to_string(g.label(n)), by_label.size()).first->second;
    }
  }
  std::size_t n_classes = 0;
  for (;;) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> by_sig;
    std::vector<std::size_t> next(g.size());
    for (NodeRef n = 0; n < g.size(); ++n) {
      auto sig = g.is_leaf(n)
                     ? std::tuple{cls[n], kNoChild + std::size_t{0}, kNoChild + std::size_t{0}}
                     : std::tuple{cls[n], cls[g.down(n)], cls[g.right(n)]};
      next[n] = by_sig.try_emplace(sig, by_sig.size()).first->second;
    }
    std::size_t count = by_sig.size();
    cls = std::move(next);
    if (count == n_classes) break;
    n_classes = count;
  }
  return cls;
}

// A string that is equal for two graphs of the same kind exactly when their
// roots are bisimilar: the minimal quotient, numbered breadth first from the
// root.
inline std::string canonical_form(const TermGraph& g) {
  auto cls = bisimulation_classes(g);
  std::vector<NodeRef> representative(g.size(), kNoChild);
  for (NodeRef n = 0; n < g.size(); ++n) {
    if (representative[cls[n]] == kNoChild) representative[cls[n]] = n;
  }
  std::unordered_map<std::size_t, std::size_t> number;
  std::deque<std::size_t> queue{cls[g.root()]};
  number[cls[g.root()]] = 0;
  std::string out = std::string(to_string(g.kind())) + "\n";
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    NodeRef n = representative[c];
    out += std::to_string(number[c]) + " " + to_string(g.label(n));
    if (!g.is_leaf(n)) {
      for (NodeRef child : {g.down(n), g.right(n)}) {
        auto [it, fresh] = number.try_emplace(cls[child], number.size());
        if (fresh) queue.push_back(cls[child]);
        out += " " + std::to_string(it->second);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace infgame

#endif  // INFGAME_TERMGRAPH_HPP_
