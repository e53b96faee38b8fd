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
#ifndef PGFPT_GAME_HPP
#define PGFPT_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgfpt/node_set.hpp"

namespace pg {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

using Priority = std::uint32_t;

constexpr Player opponent(Player p) noexcept { return p == Player::Even ? Player::Odd : Player::Even; }
constexpr int index_of(Player p) noexcept { return static_cast<int>(p); }
constexpr Player player_of(int i) noexcept { return i == 0 ? Player::Even : Player::Odd; }

/** The player who wins a play whose dominant priority is pr. */
constexpr Player parity_of(Priority pr) noexcept { return (pr & 1U) ? Player::Odd : Player::Even; }

/** p1(v): the priority if odd, its negation if even. Larger means better for Odd. */
constexpr std::int64_t p1_value(Priority pr) noexcept
{
    return (pr & 1U) ? static_cast<std::int64_t>(pr) : -static_cast<std::int64_t>(pr);
}

/** Player-relative version of p1_value: larger means better for p. */
constexpr std::int64_t preference(Player p, Priority pr) noexcept
{
    return p == Player::Odd ? p1_value(pr) : -p1_value(pr);
}

/**
 * A parity game with dense node ids 0..n-1.
 *
 * Adjacency is kept in compressed form; successor lists are sorted ascending
 * and the predecessor lists are the exact transpose. Instances are immutable.
 */
class ParityGame
{
public:
    ParityGame() = default;

    /**
     * Builds a game, sorting successor lists, collapsing parallel edges and
     * deriving predecessors. Throws PreconditionViolated on out-of-range ids or
     * mismatched vector sizes. Nodes without successors are accepted; use
     * validate() to detect them.
     */
    ParityGame(std::vector<Player> owners, std::vector<Priority> priorities,
               const std::vector<std::vector<NodeId>>& successors);

    /** Stores adjacency exactly as given, for validation of untrusted data. */
    static ParityGame from_raw(std::vector<Player> owners, std::vector<Priority> priorities,
                               const std::vector<std::vector<NodeId>>& successors,
                               const std::vector<std::vector<NodeId>>& predecessors);

    std::size_t n() const noexcept { return owner_.size(); }
    std::size_t m() const noexcept { return out_adj_.size(); }

    Player owner(NodeId v) const noexcept { return owner_[v]; }
    Priority priority(NodeId v) const noexcept { return prio_[v]; }

    std::span<const NodeId> succ(NodeId v) const noexcept
    {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const NodeId> pred(NodeId v) const noexcept
    {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }
    std::size_t out_degree(NodeId v) const noexcept { return out_off_[v + 1] - out_off_[v]; }
    std::size_t in_degree(NodeId v) const noexcept { return in_off_[v + 1] - in_off_[v]; }
    bool has_edge(NodeId u, NodeId v) const noexcept;

    const std::vector<Player>& owners() const noexcept { return owner_; }
    const std::vector<Priority>& priorities() const noexcept { return prio_; }

    NodeSet nodes() const { return NodeSet::full(n()); }
    NodeSet nodes_of(Player p) const;
    std::size_t count_of(Player p) const noexcept;
    Priority max_priority() const noexcept;

    /** Successor lists as nested vectors (for building modified copies). */
    std::vector<std::vector<NodeId>> successor_lists() const;

    bool operator==(const ParityGame& other) const = default;

private:
    std::vector<Player> owner_;
    std::vector<Priority> prio_;
    std::vector<std::uint32_t> out_off_{0};
    std::vector<NodeId> out_adj_;
    std::vector<std::uint32_t> in_off_{0};
    std::vector<NodeId> in_adj_;
};

struct ValidationReport
{
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/** Lists every violated structural invariant (sinks, dangling ids, duplicates, transpose). */
ValidationReport validate(const ParityGame& game);

bool is_bipartite(const ParityGame& game);

struct GameStats
{
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    Player owner_of_k = Player::Odd;
    std::size_t priority_count = 0;
    Priority p_max = 0;
    /** s_of[j] = number of nodes with out-degree <= j, for j in 0..n. */
    std::vector<std::size_t> s_of;

    std::size_t s(std::size_t j) const noexcept { return s_of.empty() ? 0 : s_of[j < s_of.size() ? j : s_of.size() - 1]; }
};

GameStats stats(const ParityGame& game);

/** min(|V0|,|V1|) and the side that realizes it (Odd on ties). */
Player smaller_side(const ParityGame& game) noexcept;
std::size_t distinct_priorities(const ParityGame& game);

struct SubGame
{
    ParityGame game;
    std::vector<NodeId> to_parent;
    std::vector<NodeId> to_child;
};

/** Induced game on V \ remove. Throws PreconditionViolated if a survivor loses all successors. */
SubGame subgame(const ParityGame& game, const NodeSet& remove);

/** Induced game on keep (shorthand for subgame(game, complement of keep)). */
SubGame restrict_to(const ParityGame& game, const NodeSet& keep);

/** Exchanges owners and adds one to every priority; the winners swap exactly. */
ParityGame swap_roles(const ParityGame& game);

} // namespace pg

#endif
