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

// Hand-built instances of the shipped example files.

#ifndef INFGAME_TESTS_SUPPORT_FIXTURES_HPP_
#define INFGAME_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>

#include "infgame/infgame.hpp"

#ifndef INFGAME_GAMES_DIR
#error "INFGAME_GAMES_DIR must point at the games/ directory"
#endif

namespace infgame::testing {

inline std::string games_file(const std::string& file) {
  return std::string(INFGAME_GAMES_DIR) + "/" + file;
}

inline PayoffFn ab(long a, long b) { return PayoffFn{{"A", a}, {"B", b}}; }

// The eight-decision finite game. `choices` lists one of d/r per inner node
// in the order gg, gg1, gg1d, gg2, gg2d, gg2r, gg2rd, gg2rdd; empty for the
// game itself.
inline TermGraph gg_graph(const std::string& choices = "") {
  GraphBuilder b(choices.empty() ? GraphKind::game : GraphKind::profile);
  const char* names[] = {"gg", "gg1", "gg1d", "gg2", "gg2d", "gg2r", "gg2rd", "gg2rdd"};
  NodeRef at[8];
  for (std::size_t i = 0; i < 8; ++i) at[i] = b.reserve(names[i]);
  auto define = [&](std::size_t i, const Agent& owner, NodeRef d, NodeRef r) {
    if (choices.empty()) {
      b.define(at[i], GameNode{owner}, d, r);
    } else {
      b.define(at[i], ProfileNode{owner, choices.at(i) == 'd' ? Choice::d : Choice::r}, d, r);
    }
  };
  define(0, "A", at[1], at[3]);
  define(1, "A", at[2], b.leaf(ab(2, 0)));
  define(2, "B", b.leaf(ab(1, 8)), b.leaf(ab(4, 7)));
  define(3, "B", at[4], at[5]);
  define(4, "A", b.leaf(ab(2, 2)), b.leaf(ab(1, 2)));
  define(5, "A", at[6], b.leaf(ab(3, 2)));
  define(6, "A", at[7], b.leaf(ab(2, 1)));
  define(7, "B", b.leaf(ab(1, 1)), b.leaf(ab(3, 6)));
  return b.build(at[0]);
}

inline Game gg() { return Game(gg_graph()); }
inline StratProf s1() { return StratProf(gg_graph("rrdrdrdr")); }
inline StratProf s2() { return StratProf(gg_graph("rrdrdddr")); }
inline StratProf s3() { return StratProf(gg_graph("drrdrddr")); }

inline StratProf s11() {
  GraphBuilder b(GraphKind::profile);
  NodeRef bx = b.profile("B", Choice::d, b.leaf(ab(1, 8)), b.leaf(ab(4, 7)));
  return StratProf(b.build(b.profile("A", Choice::r, bx, b.leaf(ab(2, 0)))));
}

// Two-node cycles over the 0,1-game, A moving at `a`, B at `b`.
inline StratProf zero_one_cycle(Choice a, Choice b_choice, bool start_with_b = false) {
  GraphBuilder b(GraphKind::profile);
  NodeRef na = b.reserve("a");
  NodeRef nb = b.reserve("b");
  b.define(na, ProfileNode{"A", a}, b.leaf(ab(0, 1)), nb);
  b.define(nb, ProfileNode{"B", b_choice}, b.leaf(ab(1, 0)), na);
  return StratProf(b.build(start_with_b ? nb : na));
}

inline StratProf s10a() { return zero_one_cycle(Choice::r, Choice::d); }
inline StratProf s10b() { return zero_one_cycle(Choice::r, Choice::d, true); }
inline StratProf s01a() { return zero_one_cycle(Choice::d, Choice::r); }
inline StratProf s01b() { return zero_one_cycle(Choice::d, Choice::r, true); }
inline StratProf s_box_r() { return zero_one_cycle(Choice::r, Choice::r); }

inline StratProf s_d_box_r() {
  GraphBuilder b(GraphKind::profile);
  NodeRef root = b.reserve("root");
  NodeRef nb = b.reserve("b");
  NodeRef na = b.reserve("a");
  b.define(root, ProfileNode{"A", Choice::d}, b.leaf(ab(0, 1)), nb);
  b.define(nb, ProfileNode{"B", Choice::r}, b.leaf(ab(1, 0)), na);
  b.define(na, ProfileNode{"A", Choice::r}, b.leaf(ab(0, 1)), nb);
  return StratProf(b.build(root));
}

}  // namespace infgame::testing

#endif  // INFGAME_TESTS_SUPPORT_FIXTURES_HPP_
