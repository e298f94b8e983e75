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

// The 0,1-game: constructors for its regular profiles, the S0/S1, AcBes and
// BcAes predicates, the SPE characterization check, escalation witnesses,
// finite truncations (dollar auction, the F and K families) and the
// backward-induction characterization on those truncations.

#ifndef INFGAME_ZERO_ONE_HPP_
#define INFGAME_ZERO_ONE_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "infgame/core.hpp"
#include "infgame/equilibrium.hpp"
#include "infgame/game_model.hpp"
#include "infgame/strategy.hpp"
#include "infgame/termgraph.hpp"

namespace infgame {

inline const Agent kAgentA = "A";
inline const Agent kAgentB = "B";

inline PayoffFn f01() { return PayoffFn{{kAgentA, 0}, {kAgentB, 1}}; }
inline PayoffFn f10() { return PayoffFn{{kAgentA, 1}, {kAgentB, 0}}; }

inline Game make_zero_one() {
  GraphBuilder b(GraphKind::game);
  NodeRef g01 = b.reserve("g01");
  NodeRef g10 = b.reserve("g10");
  b.define(g01, GameNode{kAgentA}, b.leaf(f01(), "f01"), g10);
  b.define(g10, GameNode{kAgentB}, b.leaf(f10(), "f10"), g01);
  return Game(b.build(g01));
}

// An eventually periodic choice sequence prefix·period^ω along the spine of
// the 0,1-game. Even positions belong to A, odd ones to B.
struct ZeroOneWord {
  std::string prefix;
  std::string period;

  friend bool operator==(const ZeroOneWord&, const ZeroOneWord&) = default;
  friend auto operator<=>(const ZeroOneWord&, const ZeroOneWord&) = default;
};

// "d(r)" for prefix "d", period "r".
inline std::string to_string(const ZeroOneWord& w) {
  return w.prefix + "(" + w.period + ")";
}

inline void check_word(const ZeroOneWord& w) {
  if (w.period.empty()) throw Error("empty period");
  for (char c : w.prefix + w.period) {
    if (c != 'd' && c != 'r') throw Error(std::string("invalid choice '") + c + "' in word");
  }
}

inline Choice choice_of(char c) { return c == 'd' ? Choice::d : Choice::r; }

// Spine nodes for prefix·period', where period' is the period doubled when
// its length is odd. The loop back lands on a node of the same owner.
inline StratProf make_zero_one_profile(const ZeroOneWord& w) {
  check_word(w);
  std::string loop = w.period.size() % 2 == 0 ? w.period : w.period + w.period;
  std::string spine = w.prefix + loop;
  GraphBuilder b(GraphKind::profile);
  std::vector<NodeRef> nodes;
  for (std::size_t i = 0; i < spine.size(); ++i) nodes.push_back(b.reserve("w" + std::to_string(i)));
  NodeRef stop_a = b.leaf(f01(), "f01");
  NodeRef stop_b = b.leaf(f10(), "f10");
  for (std::size_t i = 0; i < spine.size(); ++i) {
    bool a_moves = i % 2 == 0;
    NodeRef next = i + 1 < spine.size() ? nodes[i + 1] : nodes[w.prefix.size()];
    b.define(nodes[i], ProfileNode{a_moves ? kAgentA : kAgentB, choice_of(spine[i])},
             a_moves ? stop_a : stop_b, next);
  }
  return StratProf(b.build(nodes[0]));
}

namespace detail {

inline bool leaf_with(const TermGraph& g, NodeRef n, const PayoffFn& f) {
  const auto* leaf = std::get_if<Leaf>(&g.label(n));
  return leaf != nullptr && leaf->payoff == f;
}

// n = <owner, c, <f>, _>
inline bool spine_node(const TermGraph& g, NodeRef n, const Agent& owner, const PayoffFn& f) {
  const auto* l = std::get_if<ProfileNode>(&g.label(n));
  return l != nullptr && l->owner == owner && leaf_with(g, g.down(n), f);
}

}  // namespace detail

namespace rules {

// S0 at node n is state 2n, S1 is 2n+1.
inline auto s0_s1(const TermGraph& g) {
  return [&g](std::size_t state) -> RuleBody {
    auto n = static_cast<NodeRef>(state / 2);
    bool s0 = state % 2 == 0;
    if (!detail::spine_node(g, n, s0 ? kAgentA : kAgentB, s0 ? f01() : f10())) {
      return fails();
    }
    return requires_all({2 * std::size_t{g.right(n)} + (s0 ? 1 : 0)});
  };
}

}  // namespace rules

// Greatest fixpoint.
inline std::pair<PredicateResult, PredicateResult> s0_s1(const StratProf& s) {
  const TermGraph& g = s.graph();
  auto value = solve_fixpoint(2 * g.size(), rules::s0_s1(g), FixpointKind::greatest);
  PredicateResult s0{std::vector<bool>(g.size()), false};
  PredicateResult s1{std::vector<bool>(g.size()), false};
  for (NodeRef n = 0; n < g.size(); ++n) {
    s0.valuation[n] = value[2 * n];
    s1.valuation[n] = value[2 * n + 1];
  }
  s0.root_verdict = s0.valuation[g.root()];
  s1.root_verdict = s1.valuation[g.root()];
  return {s0, s1};
}

inline bool sat_s0(const StratProf& s) { return s0_s1(s).first.root_verdict; }
inline bool sat_s1(const StratProf& s) { return s0_s1(s).second.root_verdict; }

inline void require_zero_one(const StratProf& s) {
  auto [s0, s1] = s0_s1(s);
  if (!s0.root_verdict && !s1.root_verdict) throw Error("not a 0,1-profile");
}

namespace rules {

// "`continuer` continues and the other agent eventually stops". Nodes not of
// the form <p, c, <f>, s'> satisfy it vacuously.
inline auto continues_until_stop(Agent continuer, PayoffFn continuer_stop, Agent stopper,
                                 PayoffFn stopper_stop) {
  return [=](const TermGraph& g, NodeRef n) -> RuleBody {
    if (g.is_leaf(n) || !g.is_leaf(g.down(n))) return holds();
    const auto& [owner, choice] = profile_label(g, n);
    const auto& stop = std::get<Leaf>(g.label(g.down(n))).payoff;
    RuleBody body;
    if (owner == continuer && stop == continuer_stop && choice == Choice::r) {
      body.push_back(Clause{{g.right(n)}});
    }
    if (owner == stopper && stop == stopper_stop) {
      if (choice == Choice::d) return holds();
      body.push_back(Clause{{g.right(n)}});
    }
    return body;
  };
}

inline auto acbes() { return continues_until_stop(kAgentA, f01(), kAgentB, f10()); }
inline auto bcaes() { return continues_until_stop(kAgentB, f10(), kAgentA, f01()); }

}  // namespace rules

// Least fixpoints.
inline PredicateResult acbes_valuation(const StratProf& s) {
  require_zero_one(s);
  return lfp_eval(s.graph(), rules::acbes());
}
inline PredicateResult bcaes_valuation(const StratProf& s) {
  require_zero_one(s);
  return lfp_eval(s.graph(), rules::bcaes());
}

inline bool is_acbes(const StratProf& s) { return acbes_valuation(s).root_verdict; }
inline bool is_bcaes(const StratProf& s) { return bcaes_valuation(s).root_verdict; }
inline bool is_sacbes(const StratProf& s) {
  return always(s.graph(), acbes_valuation(s)).root_verdict;
}
inline bool is_sbcaes(const StratProf& s) {
  return always(s.graph(), bcaes_valuation(s)).root_verdict;
}

// ---------------------------------------------------------------------------
// Reports

struct Counterexample {
  std::string subject;
  std::string claim;
  bool lhs = false;
  bool rhs = false;
  std::optional<ZeroOneWord> word;
};

struct TheoremReport {
  std::string name;
  std::vector<std::pair<std::string, std::size_t>> bounds;
  std::size_t total = 0;
  std::map<std::string, std::size_t> checks;  // claim -> instances checked
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> lines;  // one machine-readable verdict per subject
  std::vector<std::string> notes;

  bool confirmed() const { return counterexamples.empty(); }

  void check(const std::string& subject, const std::string& claim, bool lhs, bool rhs,
             bool holds, std::optional<ZeroOneWord> word = std::nullopt) {
    ++checks[claim];
    if (!holds) counterexamples.push_back(Counterexample{subject, claim, lhs, rhs, std::move(word)});
  }

  std::string summary() const {
    std::string out = name;
    for (const auto& [k, v] : bounds) out += " " + k + "=" + std::to_string(v);
    out += "\ntotal " + std::to_string(total) + "\n";
    for (const auto& [claim, n] : checks) out += "checked " + claim + " x" + std::to_string(n) + "\n";
    for (const auto& note : notes) out += note + "\n";
    for (const auto& c : counterexamples) {
      out += "counterexample " + c.subject + " " + c.claim + " lhs=" + (c.lhs ? "true" : "false") +
             " rhs=" + (c.rhs ? "true" : "false") + "\n";
    }
    out += "counterexamples " + std::to_string(counterexamples.size()) + "\n";
    return out;
  }
};

// Independent of the fixpoint engine: SAcBes holds iff every A position of
// prefix·period^ω plays r and B plays d somewhere in the periodic part.
// Two unrollings of the period cover both parities of its positions.
inline bool word_oracle_strong(const ZeroOneWord& w, bool a_continues) {
  std::string unrolled = w.prefix + w.period + w.period;
  bool continuer_always_r = true;
  bool stopper_stops_in_period = false;
  for (std::size_t i = 0; i < unrolled.size(); ++i) {
    bool continuer_moves = (i % 2 == 0) == a_continues;
    if (continuer_moves) {
      continuer_always_r = continuer_always_r && unrolled[i] == 'r';
    } else if (i >= w.prefix.size() && unrolled[i] == 'd') {
      stopper_stops_in_period = true;
    }
  }
  return continuer_always_r && stopper_stops_in_period;
}

inline std::vector<std::string> all_choice_strings(std::size_t length) {
  std::vector<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    std::string w(length, 'd');
    for (std::size_t i = 0; i < length; ++i) {
      if ((mask >> (length - 1 - i)) & 1) w[i] = 'r';
    }
    out.push_back(std::move(w));
  }
  return out;
}

// All words with |prefix| <= max_prefix and 1 <= |period| <= max_period, in
// order of prefix length, prefix, period length, period.
inline std::vector<ZeroOneWord> all_words(std::size_t max_prefix, std::size_t max_period) {
  std::vector<ZeroOneWord> out;
  for (std::size_t lu = 0; lu <= max_prefix; ++lu) {
    for (const auto& u : all_choice_strings(lu)) {
      for (std::size_t lv = 1; lv <= max_period; ++lv) {
        for (const auto& v : all_choice_strings(lv)) out.push_back(ZeroOneWord{u, v});
      }
    }
  }
  return out;
}

// For every word: SPE iff SAcBes or SBcAes, with both strong predicates also
// compared against the word oracle; plus, at every node of every profile,
// AcBes => payoff f10, SAcBes => strongly convergent, SAcBes => SPE,
// SBcAes => SPE and SPE => SAcBes or SBcAes.
inline TheoremReport check_theorem(std::size_t max_prefix, std::size_t max_period) {
  if (max_period < 1) throw Error("max_period must be at least 1");
  TheoremReport report;
  report.name = "theorem01";
  report.bounds = {{"prefix", max_prefix}, {"period", max_period}};
  auto tf = [](bool b) { return b ? "true" : "false"; };
  for (const auto& w : all_words(max_prefix, max_period)) {
    ++report.total;
    StratProf s = make_zero_one_profile(w);
    const TermGraph& g = s.graph();
    std::string subject = to_string(w);

    auto [s0, s1] = s0_s1(s);
    report.check(subject, "S0 at root", s0.root_verdict, true, s0.root_verdict, w);
    report.check(subject, "game is the 0,1-game", true, true,
                 bisimilar(game_of(s), make_zero_one()), w);

    auto spe = spe_valuation(s);
    auto acbes = acbes_valuation(s);
    auto bcaes = bcaes_valuation(s);
    auto sacbes = always(g, acbes);
    auto sbcaes = always(g, bcaes);
    auto sconv = strongly_converges(s);
    auto values = payoffs(s);

    bool spe_root = spe.root_verdict;
    bool characterization = sacbes.root_verdict || sbcaes.root_verdict;
    bool oracle_a = word_oracle_strong(w, true);
    bool oracle_b = word_oracle_strong(w, false);
    report.check(subject, "SPE <=> SAcBes or SBcAes", spe_root, characterization,
                 spe_root == characterization, w);
    report.check(subject, "SAcBes matches word oracle", sacbes.root_verdict, oracle_a,
                 sacbes.root_verdict == oracle_a, w);
    report.check(subject, "SBcAes matches word oracle", sbcaes.root_verdict, oracle_b,
                 sbcaes.root_verdict == oracle_b, w);

    for (NodeRef n : reachable(g, g.root())) {
      if (g.is_leaf(n)) continue;
      std::string at = subject + "@" + g.name(n);
      bool paid_f10 = values[n].has_value() && *values[n] == f10();
      report.check(at, "AcBes => payoff f10", acbes.at(n), paid_f10, !acbes.at(n) || paid_f10, w);
      report.check(at, "SAcBes => strongly convergent", sacbes.at(n), sconv.at(n),
                   !sacbes.at(n) || sconv.at(n), w);
      report.check(at, "SAcBes => SPE", sacbes.at(n), spe.at(n), !sacbes.at(n) || spe.at(n), w);
      report.check(at, "SBcAes => SPE", sbcaes.at(n), spe.at(n), !sbcaes.at(n) || spe.at(n), w);
      report.check(at, "SPE => SAcBes or SBcAes", spe.at(n), sacbes.at(n) || sbcaes.at(n),
                   !spe.at(n) || sacbes.at(n) || sbcaes.at(n), w);
    }
    report.lines.push_back("word " + subject + " spe=" + tf(spe_root) +
                           " sacbes=" + tf(sacbes.root_verdict) +
                           " sbcaes=" + tf(sbcaes.root_verdict) + " oracle=" +
                           tf(oracle_a || oracle_b));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Escalation

struct EscalationWitnesses {
  Strat st_a;       // A always continues
  Strat st_b;       // B always continues
  StratProf s_a;    // both always continue
};

inline EscalationWitnesses escalation_witnesses() {
  GraphBuilder a(GraphKind::strategy);
  NodeRef a0 = a.reserve("stA");
  NodeRef a1 = a.reserve("stA'");
  a.define(a0, StrategyNode{Choice::r}, a.leaf(f01(), "f01"), a1);
  a.define(a1, StrategyNode{kAgentB}, a.leaf(f10(), "f10"), a0);

  GraphBuilder b(GraphKind::strategy);
  NodeRef b0 = b.reserve("stB");
  NodeRef b1 = b.reserve("stB'");
  b.define(b0, StrategyNode{kAgentA}, b.leaf(f01(), "f01"), b1);
  b.define(b1, StrategyNode{Choice::r}, b.leaf(f10(), "f10"), b0);

  GraphBuilder p(GraphKind::profile);
  NodeRef p0 = p.reserve("sA");
  NodeRef p1 = p.reserve("sB");
  p.define(p0, ProfileNode{kAgentA, Choice::r}, p.leaf(f01(), "f01"), p1);
  p.define(p1, ProfileNode{kAgentB, Choice::r}, p.leaf(f10(), "f10"), p0);

  return EscalationWitnesses{Strat(a.build(a0)), Strat(b.build(b0)), StratProf(p.build(p0))};
}

struct EscalationReport {
  static constexpr std::array<std::string_view, 6> kStatements = {
      "stA is full for A",
      "stB is full for B",
      "st2g(stA, A) = st2g(stB, B) = g01",
      "game(sA) = g01",
      "stA + stB = sA",
      "sA is not convergent",
  };
  std::array<bool, 6> items{};

  bool all() const {
    return std::all_of(items.begin(), items.end(), [](bool b) { return b; });
  }
};

inline EscalationReport check_prop_escal() {
  auto w = escalation_witnesses();
  Game g01 = make_zero_one();
  EscalationReport r;
  r.items[0] = is_full(w.st_a, kAgentA);
  r.items[1] = is_full(w.st_b, kAgentB);
  r.items[2] = bisimilar(st2g(w.st_a, kAgentA), g01) && bisimilar(st2g(w.st_b, kAgentB), g01);
  r.items[3] = bisimilar(game_of(w.s_a), g01);
  StrategyFamily fam{{kAgentA, w.st_a}, {kAgentB, w.st_b}};
  r.items[4] = are_consistent(fam) && bisimilar(sum(fam), w.s_a);
  r.items[5] = !converges(w.s_a).root_verdict;
  return r;
}

// ---------------------------------------------------------------------------
// Finite truncations

// Stage n (from 0) has an A node stopping at (-stake*n, pot-stake*n) and a
// B node stopping at (pot-stake*(n+1), -stake*n). The right child of the
// last B node is `terminal`, by default the B stop payoff of stage `rounds`.
inline Game make_dollar_auction(std::size_t rounds, const Rational& stake, const Rational& pot,
                                std::optional<PayoffFn> terminal = std::nullopt) {
  if (rounds < 1) throw Error("dollar auction needs at least one round");
  auto a_stop = [&](std::size_t n) {
    Rational paid = stake * n;
    return PayoffFn{{kAgentA, -paid}, {kAgentB, pot - paid}};
  };
  auto b_stop = [&](std::size_t n) {
    return PayoffFn{{kAgentA, pot - stake * (n + 1)}, {kAgentB, -(stake * n)}};
  };
  GraphBuilder b(GraphKind::game);
  NodeRef next = b.leaf(terminal ? *terminal : b_stop(rounds), "end");
  for (std::size_t i = rounds; i-- > 0;) {
    std::string n = std::to_string(i);
    NodeRef bn = b.game(kAgentB, b.leaf(b_stop(i), "b" + n), next, "B" + n);
    next = b.game(kAgentA, b.leaf(a_stop(i), "a" + n), bn, "A" + n);
  }
  return Game(b.build(next));
}

// F(n): n (A, B) pairs cut after B, closed by <f01>.
inline Game make_F(std::size_t n) {
  if (n < 1) throw Error("F(n) needs n >= 1");
  GraphBuilder b(GraphKind::game);
  NodeRef next = b.leaf(f01(), "end");
  for (std::size_t i = n; i-- > 0;) {
    std::string k = std::to_string(i);
    NodeRef bn = b.game(kAgentB, b.leaf(f10(), "b" + k), next, "B" + k);
    next = b.game(kAgentA, b.leaf(f01(), "a" + k), bn, "A" + k);
  }
  return Game(b.build(next));
}

// K(n): n A nodes and n-1 B nodes alternating, cut after A, closed by <f10>.
inline Game make_K(std::size_t n) {
  if (n < 1) throw Error("K(n) needs n >= 1");
  GraphBuilder b(GraphKind::game);
  NodeRef next = b.leaf(f10(), "end");
  for (std::size_t i = n; i-- > 0;) {
    std::string k = std::to_string(i);
    next = b.game(kAgentA, b.leaf(f01(), "a" + k), next, "A" + k);
    if (i > 0) {
      std::string j = std::to_string(i - 1);
      next = b.game(kAgentB, b.leaf(f10(), "b" + j), next, "B" + j);
    }
  }
  return Game(b.build(next));
}

// Inner nodes of a game in depth-first order from the root.
inline std::vector<NodeRef> inner_nodes(const Game& g) {
  std::vector<NodeRef> out;
  for (NodeRef n : reachable(g.graph(), g.root())) {
    if (!g.graph().is_leaf(n)) out.push_back(n);
  }
  return out;
}

// The profile of g with choices[i] at inner_nodes(g)[i].
inline StratProf with_choices(const Game& g, const std::vector<Choice>& choices) {
  auto inner = inner_nodes(g);
  if (choices.size() != inner.size()) throw Error("one choice per inner node required");
  std::vector<Choice> at(g.graph().size(), Choice::d);
  for (std::size_t i = 0; i < inner.size(); ++i) at[inner[i]] = choices[i];
  return StratProf(
      relabel(g.graph(), GraphKind::profile, [&](const Node& n, NodeRef i) -> NodeLabel {
        return ProfileNode{std::get<GameNode>(n.label).owner, at[i]};
      }));
}

inline std::vector<StratProf> all_profiles(const Game& g) {
  auto inner = inner_nodes(g);
  if (inner.size() > kMaxDeviationPositions) throw Error("too many profiles to enumerate");
  std::vector<StratProf> out;
  for (const auto& word : all_choice_strings(inner.size())) {
    std::vector<Choice> choices;
    for (char c : word) choices.push_back(choice_of(c));
    out.push_back(with_choices(g, choices));
  }
  return out;
}

// Choices along the spine, "drdr".
inline std::string choice_word(const StratProf& s) {
  std::string out;
  const TermGraph& g = s.graph();
  for (NodeRef n : reachable(g, g.root())) {
    if (!g.is_leaf(n)) out += to_string(profile_label(g, n).choice);
  }
  return out;
}

inline void require_finite(const StratProf& s) {
  if (!is_acyclic(s.graph())) throw Error("finite profile required");
}

namespace rules {

// SF: <f01>, or <A, _, <f01>, <B, r, <f10>, s'>> with SF(s').
inline RuleBody sf(const TermGraph& g, NodeRef n) {
  if (g.is_leaf(n)) return detail::leaf_with(g, n, f01()) ? holds() : fails();
  if (!detail::spine_node(g, n, kAgentA, f01())) return fails();
  NodeRef m = g.right(n);
  if (!detail::spine_node(g, m, kAgentB, f10()) || profile_label(g, m).choice != Choice::r) {
    return fails();
  }
  return requires_all({g.right(m)});
}

// SK: <A, r, <f01>, s'> with SK'(s'); SK': <f10>, or <B, _, <f10>, s'> with
// SK(s'). SK at node n is state 2n, SK' is 2n+1.
inline auto sk(const TermGraph& g) {
  return [&g](std::size_t state) -> RuleBody {
    auto n = static_cast<NodeRef>(state / 2);
    if (state % 2 == 0) {
      if (!detail::spine_node(g, n, kAgentA, f01()) || profile_label(g, n).choice != Choice::r) {
        return fails();
      }
      return requires_all({2 * std::size_t{g.right(n)} + 1});
    }
    if (g.is_leaf(n)) return detail::leaf_with(g, n, f10()) ? holds() : fails();
    if (!detail::spine_node(g, n, kAgentB, f10())) return fails();
    return requires_all({2 * std::size_t{g.right(n)}});
  };
}

}  // namespace rules

// Least fixpoints.
inline bool sat_sf(const StratProf& s) {
  require_finite(s);
  return lfp_eval(s.graph(), rules::sf).root_verdict;
}

inline bool sat_sk(const StratProf& s) {
  require_finite(s);
  const TermGraph& g = s.graph();
  return solve_fixpoint(2 * g.size(), rules::sk(g), FixpointKind::least)[2 * g.root()];
}

// Choices each agent makes somewhere among a set of profiles.
using ChoicePattern = std::map<Agent, std::set<Choice>>;

inline std::string to_string(const ChoicePattern& pattern) {
  std::string out;
  for (const Agent& a : {kAgentA, kAgentB}) {
    if (!out.empty()) out += " ";
    out += a + "{";
    auto it = pattern.find(a);
    if (it != pattern.end()) {
      bool first = true;
      for (Choice c : it->second) {
        if (!first) out += ",";
        first = false;
        out += to_string(c);
      }
    }
    out += "}";
  }
  return out;
}

inline ChoicePattern choice_pattern(const std::vector<StratProf>& profiles) {
  ChoicePattern out;
  for (const auto& s : profiles) {
    for (const Node& n : s.graph().nodes()) {
      if (const auto* l = std::get_if<ProfileNode>(&n.label)) out[l->owner].insert(l->choice);
    }
  }
  return out;
}

// For every n <= n_max and every profile s of F(n) (resp. K(n)):
// SF(s) <=> BI(s) (resp. SK). Also notes, per n, the choice patterns of the
// two BI sets, which must differ.
inline TheoremReport check_appendix_prop(std::size_t n_max) {
  if (n_max < 1) throw Error("n_max must be at least 1");
  TheoremReport report;
  report.name = "appendix";
  report.bounds = {{"n", n_max}};
  auto tf = [](bool b) { return b ? "true" : "false"; };
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<char, std::vector<StratProf>> equilibria;
    for (char family : {'F', 'K'}) {
      Game g = family == 'F' ? make_F(n) : make_K(n);
      for (auto& s : all_profiles(g)) {
        ++report.total;
        std::string subject =
            std::string(1, family) + "(" + std::to_string(n) + "):" + choice_word(s);
        bool bi = is_bi(s);
        bool shaped = family == 'F' ? sat_sf(s) : sat_sk(s);
        bool in_family = bisimilar(game_of(s), g);
        std::string claim = std::string(family == 'F' ? "SF" : "SK") + " <=> BI";
        report.check(subject, claim, in_family && shaped, bi, (in_family && shaped) == bi);
        report.lines.push_back("profile " + subject + " bi=" + tf(bi) + " " +
                               (family == 'F' ? "sf=" : "sk=") + tf(shaped));
        if (bi) equilibria[family].push_back(std::move(s));
      }
    }
    auto f_pattern = choice_pattern(equilibria['F']);
    auto k_pattern = choice_pattern(equilibria['K']);
    bool differ = f_pattern != k_pattern;
    report.notes.push_back("n=" + std::to_string(n) + " F-BI " + to_string(f_pattern) +
                           " K-BI " + to_string(k_pattern) +
                           (differ ? " differ" : " same"));
    report.check("n=" + std::to_string(n), "F and K equilibria differ", differ, true, differ);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Bounded payoffs and escalation

struct PayrollReport {
  Rational max_abs_payoff;
  bool bounded = false;    // every leaf payoff within the bound
  bool escalates = false;  // the all-continue strategies sum to a divergent profile
  bool holds() const { return bounded && escalates; }
};

inline StratProf all_continue(const Game& g) {
  return StratProf(relabel(g.graph(), GraphKind::profile, [](const Node& n) -> NodeLabel {
    return ProfileNode{std::get<GameNode>(n.label).owner, Choice::r};
  }));
}

inline PayrollReport payroll_check(const Game& g, const Rational& bound) {
  PayrollReport r;
  for (const Node& n : g.graph().nodes()) {
    if (const auto* leaf = std::get_if<Leaf>(&n.label)) {
      for (const auto& [agent, v] : leaf->payoff.entries()) {
        Rational a = v < 0 ? Rational(-v) : v;
        if (a > r.max_abs_payoff) r.max_abs_payoff = a;
      }
    }
  }
  r.bounded = r.max_abs_payoff <= bound;
  auto fam = split(all_continue(g));
  r.escalates = are_consistent(fam) && !converges(sum(fam)).root_verdict;
  return r;
}

inline bool payroll_note_check(const Game& g, const Rational& bound) {
  return payroll_check(g, bound).holds() && check_prop_escal().items[5];
}

inline bool payroll_note_check() { return payroll_note_check(make_zero_one(), 1); }

inline Game scaled(const Game& g, const Rational& factor) {
  std::vector<Node> nodes = g.graph().nodes();
  for (Node& n : nodes) {
    if (auto* leaf = std::get_if<Leaf>(&n.label)) {
      std::map<Agent, Rational> entries;
      for (const auto& [a, v] : leaf->payoff.entries()) entries[a] = v * factor;
      leaf->payoff = PayoffFn(std::move(entries));
    }
  }
  return Game(TermGraph::make(GraphKind::game, std::move(nodes), g.root()));
}

}  // namespace infgame

#endif  // INFGAME_ZERO_ONE_HPP_
