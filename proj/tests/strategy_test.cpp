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

#include <gtest/gtest.h>

#include "infgame/infgame.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace infgame {
namespace {

using testing::ab;

// Each agent's strategy is cut from a different random profile of g.
StrategyFamily mixed_family(const Game& g, testing::Rng& rng) {
  StrategyFamily fam;
  for (const Agent& p : g.graph().agents()) {
    StratProf source = with_choices(g, [&] {
      std::vector<Choice> cs;
      for (std::size_t i = 0; i < inner_nodes(g).size(); ++i) {
        cs.push_back(testing::coin(rng) ? Choice::r : Choice::d);
      }
      return cs;
    }());
    TermGraph st = strategy_of(source, p).graph();
    fam.emplace(p, Strat(testing::coin(rng) ? testing::permuted(st, rng) : testing::doubled(st)));
  }
  return fam;
}

Strat leaf_strategy() {
  GraphBuilder b(GraphKind::strategy);
  return Strat(b.build(b.leaf(ab(4, 4))));
}

TEST(Fullness, EscalationStrategies) {
  auto w = escalation_witnesses();
  EXPECT_TRUE(is_full(w.st_a, "A"));
  EXPECT_TRUE(is_full(w.st_b, "B"));
  EXPECT_FALSE(is_full(w.st_a, "B"));
  EXPECT_FALSE(is_full(w.st_b, "A"));
}

TEST(Fullness, AlwaysContinueOverFiniteGame) {
  Strat st = strategy_of(all_continue(testing::gg()), "A");
  EXPECT_TRUE(is_full(st, "A"));
  for (NodeRef n = 0; n < st.graph().size(); ++n) {
    if (!st.graph().is_leaf(n) && std::holds_alternative<Choice>(head_of(st.graph(), n))) {
      EXPECT_EQ(std::get<Choice>(head_of(st.graph(), n)), Choice::r);
    }
  }
}

TEST(FullnessProperty, MatchesNoReachableHead) {
  testing::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    Strat st(testing::random_graph(rng, GraphKind::strategy));
    for (const Agent& p : {Agent("A"), Agent("B")}) {
      auto full = fullness(st, p);
      for (NodeRef n = 0; n < st.graph().size(); ++n) {
        bool oracle = testing::everywhere_below(st.graph(), n, [&](NodeRef m) {
          return st.graph().is_leaf(m) || !head_is(st.graph(), m, p);
        });
        EXPECT_EQ(full.at(n), oracle);
      }
    }
  }
}

TEST(St2g, EscalationStrategiesGiveZeroOneGame) {
  auto w = escalation_witnesses();
  EXPECT_TRUE(bisimilar(st2g(w.st_a, "A"), make_zero_one()));
  EXPECT_TRUE(bisimilar(st2g(w.st_b, "B"), make_zero_one()));
}

TEST(St2g, LeafStrategy) {
  Game g = st2g(leaf_strategy(), "A");
  EXPECT_TRUE(g.graph().is_leaf(g.root()));
  EXPECT_EQ(std::get<Leaf>(g.graph().label(g.root())).payoff, ab(4, 4));
}

TEST(Consistency, Examples) {
  auto w = escalation_witnesses();
  EXPECT_TRUE(are_consistent({{"A", w.st_a}, {"B", w.st_b}}));
  auto problem = consistency_problem({{"A", w.st_a}, {"B", w.st_a}});
  ASSERT_TRUE(problem.has_value());
  EXPECT_EQ(problem->rfind("fullness", 0), 0u) << *problem;
  EXPECT_TRUE(are_consistent({{"A", leaf_strategy()}, {"B", leaf_strategy()}}));
  EXPECT_FALSE(are_consistent({{"A", w.st_a}}));
  EXPECT_FALSE(are_consistent({}));
}

TEST(Consistency, DifferentGames) {
  Strat a = strategy_of(testing::s1(), "A");
  Strat b = strategy_of(testing::s10a(), "B");
  auto problem = consistency_problem({{"A", a}, {"B", b}});
  ASSERT_TRUE(problem.has_value());
  EXPECT_EQ(problem->rfind("common-game", 0), 0u) << *problem;
}

TEST(Sum, EscalationStrategiesSumToAlwaysContinue) {
  auto w = escalation_witnesses();
  StratProf s = sum({{"A", w.st_a}, {"B", w.st_b}});
  EXPECT_TRUE(bisimilar(s, w.s_a));
  EXPECT_TRUE(bisimilar(s, make_zero_one_profile(ZeroOneWord{"", "r"})));
  EXPECT_FALSE(converges(s).root_verdict);
}

TEST(Sum, LeafFamily) {
  StratProf s = sum({{"A", leaf_strategy()}, {"B", leaf_strategy()}});
  ASSERT_TRUE(s.graph().is_leaf(s.root()));
  EXPECT_EQ(payoff(s).payoff(), ab(4, 4));
}

TEST(Sum, AlwaysContinueForAOverFiniteGame) {
  Strat st_a = strategy_of(all_continue(testing::gg()), "A");
  for (const StratProf& other : {testing::s1(), testing::s3()}) {
    StratProf s = sum({{"A", st_a}, {"B", strategy_of(other, "B")}});
    for (const Node& n : s.graph().nodes()) {
      if (const auto* l = std::get_if<ProfileNode>(&n.label); l && l->owner == "A") {
        EXPECT_EQ(l->choice, Choice::r);
      }
    }
  }
}

TEST(Sum, InconsistentFamilyIsAnError) {
  auto w = escalation_witnesses();
  try {
    sum({{"A", w.st_a}, {"B", w.st_a}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("inconsistent strategies: fullness", 0), 0u)
        << e.what();
  }
}

TEST(SumProperty, SplitThenSumIsIdentity) {
  testing::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    StratProf s = i % 2 == 0 ? testing::random_profile_of(testing::random_finite_game(rng, 5), rng)
                             : testing::random_regular_profile(rng);
    StrategyFamily fam = split(s);
    if (fam.size() < 2) continue;
    ASSERT_TRUE(are_consistent(fam)) << *consistency_problem(fam);
    EXPECT_TRUE(bisimilar(sum(fam), s));
  }
}

TEST(SumProperty, MembersProjectToTheGameOfTheSum) {
  testing::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    Game g = testing::random_finite_game(rng, 5);
    if (g.graph().agents().size() < 2) continue;
    StrategyFamily fam = mixed_family(g, rng);
    ASSERT_TRUE(are_consistent(fam)) << *consistency_problem(fam);
    StratProf s = sum(fam);
    std::size_t bound = 1;
    for (const auto& [p, st] : fam) {
      EXPECT_TRUE(bisimilar(st2g(st, p), game_of(s)));
      bound *= st.graph().size();
    }
    EXPECT_LE(s.graph().size(), bound);
  }
}

}  // namespace
}  // namespace infgame
