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
#ifndef PGFPT_ORACLE_HPP
#define PGFPT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgfpt/deadline.hpp"
#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

/**
 * Solves a game in which every node not owned by mover has exactly one
 * successor. Both strategies are returned (the opponent's is forced).
 * Throws PreconditionViolated otherwise.
 */
SolveResult solve_solitary(const ParityGame& game, Player mover);

struct BruteOptions
{
    /** Maximum number of positional strategies to enumerate. */
    std::uint64_t budget = 1'000'000;
    /** Force the enumerated player; default is the one with fewer strategies (Odd on ties). */
    std::optional<Player> enumerate;
    /** Synthesize witness strategies for both players. */
    bool strategies = true;
    Deadline* deadline = nullptr;
};

/** Number of positional strategies of p, saturating at cap + 1. */
std::uint64_t strategy_count(const ParityGame& game, Player p, std::uint64_t cap);

/**
 * Exact solution by enumerating every positional strategy of one player and
 * solving the induced one-player game of the other. Throws BudgetExceeded.
 */
SolveResult solve_brute(const ParityGame& game, const BruteOptions& opts = {});

/**
 * True iff strat wins from every node of set when play is confined to set.
 * Throws PreconditionViolated if strat is partial on set or set is not closed
 * under strat.
 */
bool verify_strategy(const ParityGame& game, const NodeSet& set, const Strategy& strat);

/** First violated certification condition, or nullopt. Throws MissingStrategies. */
std::optional<std::string> partition_violation(const ParityGame& game, const SolveResult& result);

/** Closedness of both sets plus verification of both strategies. */
bool verify_partition(const ParityGame& game, const SolveResult& result);

namespace detail {

struct SolitaryOutcome
{
    /** Nodes of region from which mover wins. */
    NodeSet win;
    /** mover's winning choices on win. */
    Strategy strategy;
};

/**
 * One-player solve inside region. Non-mover nodes move to fixed[v] when fixed
 * is given, else to their single successor inside region. Successor-less
 * nodes are losing for mover.
 */
SolitaryOutcome solitary(const ParityGame& game, Player mover, const NodeSet& region,
                         const std::vector<NodeId>* fixed);

} // namespace detail

} // namespace pg

#endif
