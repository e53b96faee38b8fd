/*
 * Copyright 2026 The pgfpt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PGFPT_TESTS_ORACLES_HPP
#define PGFPT_TESTS_ORACLES_HPP

#include <functional>
#include <vector>

#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg::testing {

/** Attractor by repeated sweeps until nothing changes. */
NodeSet naive_attractor(const ParityGame& game, const NodeSet& target, Player i);

/** Closed for i: i has a successor inside, not-i has all successors inside. */
bool naive_closed(const ParityGame& game, const NodeSet& set, Player i);

/**
 * Winners by trying every pair of positional strategies: v is Even's iff some
 * Even strategy beats every Odd strategy from v. Exponential; tiny games only.
 */
SolveResult winners_by_strategy_pairs(const ParityGame& game);

/**
 * strat confined to set wins for its owner: no cycle reachable inside set
 * under strat has a top priority of the opponent's parity. Cycles are found
 * by plain reachability per node.
 */
bool strategy_wins(const ParityGame& game, const NodeSet& set, const Strategy& strat);

struct DominionInfo
{
    NodeSet set;
    Player owner;
    /** Members owned by the counted side. */
    std::size_t side_count;
    /** Members with out-degree > j and <= j. */
    std::size_t high;
    std::size_t low;
};

/** Every dominion of both players, found by checking all nonempty subsets. */
std::vector<DominionInfo> all_dominions(const ParityGame& game, Player side, std::size_t j);

/** Game on keep, nodes renumbered in ascending order, edges leaving keep dropped. */
ParityGame induced(const ParityGame& game, const NodeSet& keep);

/**
 * Calls f on one representative of every game with n nodes, priorities in
 * [0, priorities), all owners and all edge sets with at least one successor
 * per node, up to renaming of nodes. Returns the number of games visited.
 */
std::size_t for_each_game(std::size_t n, Priority priorities, const std::function<void(const ParityGame&)>& f);

} // namespace pg::testing

#endif
