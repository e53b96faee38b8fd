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
#ifndef PGFPT_STRATEGY_HPP
#define PGFPT_STRATEGY_HPP

#include <optional>
#include <vector>

#include "pgfpt/game.hpp"

namespace pg {

/** Positional strategy of one player: choice[v] is v's successor, or kNoNode. */
struct Strategy
{
    Player owner = Player::Even;
    std::vector<NodeId> choice;

    Strategy() = default;
    Strategy(Player p, std::size_t n) : owner(p), choice(n, kNoNode) { }

    bool defined(NodeId v) const noexcept { return v < choice.size() && choice[v] != kNoNode; }
    NodeId operator[](NodeId v) const noexcept { return choice[v]; }
    void set(NodeId v, NodeId w) { choice[v] = w; }
    void clear(NodeId v) { choice[v] = kNoNode; }

    bool operator==(const Strategy&) const = default;
};

struct SolveResult
{
    NodeSet w0;
    NodeSet w1;
    std::optional<Strategy> strategy0;
    std::optional<Strategy> strategy1;

    SolveResult() = default;
    explicit SolveResult(std::size_t n) : w0(n), w1(n) { }

    NodeSet& won(Player p) { return p == Player::Even ? w0 : w1; }
    const NodeSet& won(Player p) const { return p == Player::Even ? w0 : w1; }
    std::optional<Strategy>& strategy(Player p) { return p == Player::Even ? strategy0 : strategy1; }
    const std::optional<Strategy>& strategy(Player p) const { return p == Player::Even ? strategy0 : strategy1; }

    /** Same winning sets, ignoring strategies. */
    bool same_partition(const SolveResult& o) const { return w0 == o.w0 && w1 == o.w1; }
};

/** w0 and w1 are disjoint and cover all nodes of game. */
bool is_partition(const ParityGame& game, const SolveResult& r);

/** Maps a result on a sub-game back to parent ids, inside a result of parent size. */
void embed(const std::vector<NodeId>& to_parent, const SolveResult& child, SolveResult& parent);

} // namespace pg

#endif
