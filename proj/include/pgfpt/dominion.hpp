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
#ifndef PGFPT_DOMINION_HPP
#define PGFPT_DOMINION_HPP

#include <functional>
#include <optional>

#include "pgfpt/deadline.hpp"
#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

struct DominionResult
{
    NodeSet set;
    Player owner = Player::Even;
    /** owner's moves on set; empty choice vector when synthesis was disabled. */
    Strategy witness;
};

struct DegreeBudget
{
    /** Nodes of out-degree > j. */
    std::size_t ell = 0;
    /** Nodes of out-degree <= j. */
    std::size_t s = 0;
    std::size_t j = 1;
};

using SubSolver = std::function<SolveResult(const ParityGame&)>;

struct OddNodeOptions
{
    /** Side whose nodes are counted; default smaller_side(game). */
    std::optional<Player> side;
    /** Solve the found set with zielonka when the subsolver returns no strategy. */
    bool synthesize_witness = true;
    Deadline* deadline = nullptr;
};

/**
 * An i-dominion with at most ell nodes of the counted side, or nullopt.
 * Tries every subset of size min(ell, k) of the counted side for Even, then Odd.
 */
std::optional<DominionResult> find_dominion_by_odd_nodes(const ParityGame& game, std::size_t ell,
                                                         const SubSolver& subsolver,
                                                         const OddNodeOptions& opts = {});

/**
 * An i-dominion with at most budget.ell high and budget.s low out-degree
 * nodes, grown from every start node over every choice sequence.
 */
std::optional<DominionResult> find_dominion_by_degree(const ParityGame& game, const DegreeBudget& budget,
                                                      Deadline* deadline = nullptr);

} // namespace pg

#endif
