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

// SPE by direct inspection: every reachable node converges everywhere
// below and its chosen child is at least as good for its owner.
bool spe_oracle(const StratProf& s) {
  const TermGraph& g = s.graph();
  for (NodeRef n : reachable(g, g.root())) {
    if (g.is_leaf(n)) continue;
    if (!testing::walk_converges(g, n)) return false;
    const auto& [owner, choice] = std::get<ProfileNode>(g.label(n));
    Rational d = testing::walk_payoff(g, g.down(n))->at(owner);
    Rational r = testing::walk_payoff(g, g.right(n))->at(owner);
    if (choice == Choice::d ? d < r : r < d) return false;
  }
  return true;
}

StratProf word(const std::string& u, const std::string& v) {
  return make_zero_one_profile(ZeroOneWord{u, v});
}

TEST(ZeroOneGame, Shape) {
  Game g = make_zero_one();
  EXPECT_EQ(g.graph().size(), 4u);
  EXPECT_EQ(std::get<GameNode>(g.graph().label(g.root())).owner, "A");
  EXPECT_EQ(std::get<Leaf>(g.graph().label(g.graph().down(g.root()))).payoff, ab(0, 1));
  EXPECT_TRUE(bisimilar(make_zero_one(), make_zero_one()));
  EXPECT_EQ(render(unfold(g.graph(), 2)),
            "A\n"
            "  d: leaf{A:0, B:1}\n"
            "  r: B\n"
            "    d: leaf{A:1, B:0}\n"
            "    r: A\n"
            "      d: ...\n"
            "      r: ...\n");
}

TEST(ZeroOneProfile, NamedProfilesFromWords) {
  EXPECT_TRUE(bisimilar(word("", "rd"), testing::s10a()));
  EXPECT_TRUE(bisimilar(word("", "dr"), testing::s01a()));
  EXPECT_TRUE(bisimilar(word("", "r"), testing::s_box_r()));
  EXPECT_TRUE(bisimilar(word("d", "r"), testing::s_d_box_r()));
  EXPECT_EQ(word("", "rd").graph().size(), 4u);
}

TEST(ZeroOneProfile, OddPeriodIsDoubled) {
  StratProf s = word("d", "r");
  // d, then r r looping back to the first r.
  EXPECT_EQ(s.graph().size(), 5u);
  EXPECT_TRUE(sat_s0(s));
}

TEST(ZeroOneProfile, EmptyPeriodIsAnError) {
  EXPECT_THROW(word("r", ""), Error);
  EXPECT_THROW(word("x", "r"), Error);
}

TEST(ZeroOneProfileProperty, WordsForTheSameSequenceGiveBisimilarProfiles) {
  testing::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    std::string u, v;
    for (std::size_t k = testing::uniform(rng, 0, 4); k > 0; --k) u += testing::coin(rng) ? 'r' : 'd';
    for (std::size_t k = testing::uniform(rng, 1, 4); k > 0; --k) v += testing::coin(rng) ? 'r' : 'd';
    StratProf s = word(u, v);
    EXPECT_TRUE(bisimilar(s, word(u, v + v)));
    EXPECT_TRUE(bisimilar(s, word(u + v.substr(0, 1), v.substr(1) + v.substr(0, 1))));
    EXPECT_TRUE(bisimilar(s, word(u + v, v)));
    EXPECT_TRUE(bisimilar(game_of(s), make_zero_one()));
    EXPECT_TRUE(sat_s0(s));
  }
}

TEST(S0S1, Examples) {
  EXPECT_TRUE(sat_s0(testing::s_box_r()));
  EXPECT_FALSE(sat_s0(testing::s1()));
  EXPECT_TRUE(sat_s1(testing::s10b()));
  EXPECT_FALSE(sat_s0(testing::s10b()));
  EXPECT_FALSE(sat_s1(testing::s10a()));
}

TEST(AcBes, Examples) {
  EXPECT_TRUE(is_sacbes(testing::s10a()));
  EXPECT_TRUE(is_sacbes(testing::s10b()));
  EXPECT_FALSE(is_acbes(testing::s_box_r()));
  EXPECT_FALSE(is_bcaes(testing::s_box_r()));
  EXPECT_TRUE(is_sbcaes(testing::s01a()));
  EXPECT_TRUE(is_sbcaes(testing::s01b()));
  EXPECT_FALSE(is_sacbes(testing::s01a()));
}

TEST(AcBes, RequiresAZeroOneProfile) {
  try {
    is_acbes(testing::s1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not a 0,1-profile");
  }
}

TEST(AcBes, BStopsEverySecondTurn) {
  StratProf s = word("", "rrrd");
  EXPECT_TRUE(is_sacbes(s));
  EXPECT_TRUE(is_spe(s));
  EXPECT_EQ(payoff(s).payoff(), ab(1, 0));
}

TEST(Theorem, SmallestBounds) {
  TheoremReport r = check_theorem(0, 1);
  EXPECT_TRUE(r.confirmed()) << r.summary();
  EXPECT_EQ(r.total, 2u);
  EXPECT_FALSE(is_spe(word("", "r")));
}

TEST(Theorem, AlternatingEquilibrium) {
  TheoremReport r = check_theorem(0, 2);
  EXPECT_TRUE(r.confirmed()) << r.summary();
  StratProf s = word("", "rd");
  EXPECT_TRUE(is_spe(s));
  EXPECT_TRUE(is_sacbes(s) || is_sbcaes(s));
  EXPECT_NE(std::find(r.lines.begin(), r.lines.end(),
                      "word (rd) spe=true sacbes=true sbcaes=false oracle=true"),
            r.lines.end());
}

TEST(Theorem, TotalAtTheDeskBound) {
  // 127 prefixes times 30 periods.
  EXPECT_EQ(testing::word_count(6, 4), 3810u);
  EXPECT_EQ(all_words(6, 4).size(), testing::word_count(6, 4));
}

TEST(TheoremProperty, SpeMatchesDirectInspection) {
  for (const auto& w : all_words(4, 4)) {
    StratProf s = make_zero_one_profile(w);
    bool spe = is_spe(s);
    EXPECT_EQ(spe, spe_oracle(s)) << to_string(w);
    EXPECT_EQ(spe, is_sacbes(s) || is_sbcaes(s)) << to_string(w);
  }
}

TEST(TheoremProperty, NodeWiseImplications) {
  for (const auto& w : all_words(3, 4)) {
    StratProf s = make_zero_one_profile(w);
    const TermGraph& g = s.graph();
    auto acbes = acbes_valuation(s);
    auto sacbes = always(g, acbes);
    auto sbcaes = always(g, bcaes_valuation(s));
    auto spe = spe_valuation(s);
    auto sconv = strongly_converges(s);
    for (NodeRef n : reachable(g, g.root())) {
      if (g.is_leaf(n)) continue;
      if (acbes.at(n)) {
        EXPECT_EQ(testing::walk_payoff(g, n), std::optional<PayoffFn>(f10())) << to_string(w);
      }
      if (sacbes.at(n)) {
        EXPECT_TRUE(sconv.at(n));
        EXPECT_TRUE(spe.at(n));
      }
      if (sbcaes.at(n)) {
        EXPECT_TRUE(spe.at(n));
      }
      if (spe.at(n)) {
        EXPECT_TRUE(sacbes.at(n) || sbcaes.at(n));
      }
    }
  }
}

TEST(Escalation, Witnesses) {
  auto w = escalation_witnesses();
  const TermGraph& a = w.st_a.graph();
  EXPECT_EQ(std::get<Choice>(head_of(a, a.root())), Choice::r);
  EXPECT_EQ(std::get<Agent>(head_of(a, a.right(a.root()))), "B");
  EXPECT_TRUE(bisimilar(w.s_a, word("", "r")));
  EXPECT_TRUE(bisimilar(st2g(w.st_b, "B"), make_zero_one()));
}

TEST(Escalation, AllSixStatementsHold) {
  EscalationReport r = check_prop_escal();
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    EXPECT_TRUE(r.items[i]) << EscalationReport::kStatements[i];
  }
  EXPECT_TRUE(r.all());
}

TEST(DollarAuction, FirstRound) {
  Game g = make_dollar_auction(1, 5, 100);
  const TermGraph& t = g.graph();
  NodeRef a0 = t.root();
  NodeRef b0 = t.right(a0);
  EXPECT_EQ(std::get<Leaf>(t.label(t.down(a0))).payoff, ab(0, 100));
  EXPECT_EQ(std::get<Leaf>(t.label(t.down(b0))).payoff, ab(95, 0));
}

TEST(DollarAuction, ThirdRound) {
  Game g = make_dollar_auction(3, 5, 100);
  const TermGraph& t = g.graph();
  NodeRef a2 = *t.find("A2");
  NodeRef b2 = *t.find("B2");
  EXPECT_EQ(std::get<Leaf>(t.label(t.down(a2))).payoff, ab(-10, 90));
  EXPECT_EQ(std::get<Leaf>(t.label(t.down(b2))).payoff, ab(85, -10));
  EXPECT_EQ(inner_nodes(g).size(), 6u);
}

TEST(DollarAuction, ZeroStakes) {
  Game g = make_dollar_auction(1, 0, 0);
  for (const Node& n : g.graph().nodes()) {
    if (const auto* l = std::get_if<Leaf>(&n.label)) {
      EXPECT_EQ(l->payoff, ab(0, 0));
    }
  }
}

TEST(Truncations, FirstMembers) {
  GraphBuilder f(GraphKind::game);
  TermGraph f1 = f.build(f.game("A", f.leaf(f01()), f.game("B", f.leaf(f10()), f.leaf(f01()))));
  EXPECT_TRUE(bisimilar(make_F(1).graph(), f1));
  GraphBuilder k(GraphKind::game);
  TermGraph k1 = k.build(k.game("A", k.leaf(f01()), k.leaf(f10())));
  EXPECT_TRUE(bisimilar(make_K(1).graph(), k1));
  GraphBuilder k2(GraphKind::game);
  NodeRef last = k2.game("A", k2.leaf(f01()), k2.leaf(f10()));
  TermGraph kk = k2.build(k2.game("A", k2.leaf(f01()), k2.game("B", k2.leaf(f10()), last)));
  EXPECT_TRUE(bisimilar(make_K(2).graph(), kk));
}

TEST(Truncations, InnerNodeCounts) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(inner_nodes(make_F(n)).size(), 2 * n);
    EXPECT_EQ(inner_nodes(make_K(n)).size(), 2 * n - 1);
  }
}

TEST(Truncations, ShapePredicates) {
  Game f1 = make_F(1);
  EXPECT_TRUE(sat_sf(with_choices(f1, {Choice::d, Choice::r})));
  EXPECT_TRUE(sat_sf(with_choices(f1, {Choice::r, Choice::r})));
  EXPECT_FALSE(sat_sf(with_choices(f1, {Choice::d, Choice::d})));
  EXPECT_FALSE(sat_sf(with_choices(f1, {Choice::r, Choice::d})));
  GraphBuilder b(GraphKind::profile);
  EXPECT_TRUE(sat_sf(StratProf(b.build(b.leaf(f01())))));
  EXPECT_THROW(sat_sf(testing::s10a()), Error);
}

TEST(Truncations, FirstCutByExhaustion) {
  std::size_t bi_count = 0;
  for (const auto& s : all_profiles(make_F(1))) {
    EXPECT_EQ(is_bi(s), sat_sf(s));
    bi_count += is_bi(s);
  }
  EXPECT_EQ(all_profiles(make_F(1)).size(), 4u);
  EXPECT_EQ(bi_count, 2u);
  for (const auto& s : all_profiles(make_K(1))) EXPECT_EQ(is_bi(s), sat_sk(s));
}

TEST(Truncations, CharacterizationUpToFive) {
  TheoremReport r = check_appendix_prop(5);
  EXPECT_TRUE(r.confirmed()) << r.summary();
  // 4^n profiles of F(n) and 2^(2n-1) of K(n).
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 5; ++n) expected += (std::size_t{1} << (2 * n)) + (std::size_t{1} << (2 * n - 1));
  EXPECT_EQ(r.total, expected);
  EXPECT_EQ(r.notes.size(), 5u);
}

TEST(Payroll, ZeroOneGameEscalatesWithBoundedPayoffs) {
  EXPECT_TRUE(payroll_note_check());
  PayrollReport r = payroll_check(make_zero_one(), 1);
  EXPECT_EQ(r.max_abs_payoff, 1);
  EXPECT_TRUE(r.bounded);
  EXPECT_TRUE(r.escalates);
}

TEST(Payroll, ScaledCopy) {
  Game big = scaled(make_zero_one(), 1000);
  EXPECT_TRUE(payroll_note_check(big, 1000));
  EXPECT_FALSE(payroll_note_check(big, 1));
}

TEST(Payroll, DollarAuctionTruncationIsUnbounded) {
  Game g = make_dollar_auction(25, 5, 100);
  PayrollReport r = payroll_check(g, 100);
  EXPECT_FALSE(r.bounded);
  EXPECT_EQ(r.max_abs_payoff, 125);  // B has paid 25 bids of 5 at the terminal leaf
  EXPECT_FALSE(payroll_note_check(g, 100));
  EXPECT_TRUE(payroll_check(make_dollar_auction(20, 5, 100), 100).bounded);
}

}  // namespace
}  // namespace infgame
