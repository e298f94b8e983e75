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

#ifndef INFGAME_INFGAME_HPP_
#define INFGAME_INFGAME_HPP_

#include "infgame/core.hpp"
#include "infgame/equilibrium.hpp"
#include "infgame/game_model.hpp"
#include "infgame/gamedsl.hpp"
#include "infgame/strategy.hpp"
#include "infgame/termgraph.hpp"
#include "infgame/zero_one.hpp"

#endif  // INFGAME_INFGAME_HPP_
