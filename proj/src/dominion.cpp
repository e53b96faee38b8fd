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
#include "pgfpt/dominion.hpp"

#include <algorithm>

#include "pgfpt/attractor.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/zielonka.hpp"

namespace pg {

namespace {

std::optional<DominionResult>
try_subset(const ParityGame& game, const std::vector<NodeId>& side, const std::vector<std::size_t>& pick,
           Player i, const SubSolver& subsolver, const OddNodeOptions& opts)
{
    NodeSet rest(game.n());
    for (auto v : side) rest.insert(v);
    for (auto idx : pick) rest.erase(side[idx]);
    NodeSet keep = attractor(game, rest, opponent(i)).set.complement();
    if (keep.empty()) return std::nullopt;
    auto sub = restrict_to(game, keep);
    SolveResult r = subsolver(sub.game);
    if (r.won(i).empty()) return std::nullopt;

    DominionResult d;
    d.owner = i;
    d.set = NodeSet(game.n());
    for (auto v : r.won(i)) d.set.insert(sub.to_parent[v]);
    if (r.strategy(i)) {
        d.witness = Strategy(i, game.n());
        for (auto v : r.won(i)) {
            if (game.owner(sub.to_parent[v]) == i) d.witness.set(sub.to_parent[v], sub.to_parent[(*r.strategy(i))[v]]);
        }
    } else if (opts.synthesize_witness) {
        auto inner = restrict_to(game, d.set);
        auto z = win(inner.game);
        d.witness = Strategy(i, game.n());
        for (NodeId v = 0; v < inner.game.n(); ++v) {
            if (inner.game.owner(v) == i) d.witness.set(inner.to_parent[v], inner.to_parent[(*z.strategy(i))[v]]);
        }
    } else {
        d.witness.owner = i;
    }
    return d;
}

/** Next k-subset of {0..n-1} in lexicographic order. */
bool
next_subset(std::vector<std::size_t>& pick, std::size_t n)
{
    const std::size_t k = pick.size();
    for (std::size_t t = k; t-- > 0;) {
        if (pick[t] < n - k + t) {
            ++pick[t];
            for (std::size_t u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
            return true;
        }
    }
    return false;
}

class DegreeSearch
{
public:
    DegreeSearch(const ParityGame& game, const DegreeBudget& budget, Deadline* deadline)
        : game_(game), budget_(budget), deadline_(deadline)
    {
    }

    std::optional<DominionResult> run()
    {
        for (Player i : {Player::Even, Player::Odd}) {
            player_ = i;
            for (NodeId v = 0; v < game_.n(); ++v) {
                State st;
                if (!st.add(v, high(v), budget_)) continue;
                if (auto d = grow(std::move(st))) return d;
            }
        }
        return std::nullopt;
    }

private:
    struct State
    {
        /** Members in insertion order with their mark and chosen successor. */
        std::vector<NodeId> members;
        std::vector<std::uint8_t> marked;
        std::vector<NodeId> choice;
        std::size_t high = 0;
        std::size_t low = 0;

        bool contains(NodeId v) const { return std::find(members.begin(), members.end(), v) != members.end(); }

        bool add(NodeId v, bool is_high, const DegreeBudget& b)
        {
            if (contains(v)) return true;
            members.push_back(v);
            marked.push_back(0);
            choice.push_back(kNoNode);
            if (is_high) return ++high <= b.ell;
            return ++low <= b.s;
        }
    };

    bool high(NodeId v) const { return game_.out_degree(v) > budget_.j; }

    std::optional<DominionResult> grow(State st)
    {
        while (true) {
            poll(deadline_);
            std::size_t at = st.members.size();
            for (std::size_t t = 0; t < st.members.size(); ++t) {
                if (!st.marked[t] && (at == st.members.size() || st.members[t] < st.members[at])) at = t;
            }
            if (at == st.members.size()) return check(st);
            st.marked[at] = 1;
            const NodeId u = st.members[at];
            if (game_.owner(u) == player_) {
                for (auto w : game_.succ(u)) {
                    State next = st;
                    next.choice[at] = w;
                    if (!next.add(w, high(w), budget_)) continue;
                    if (auto d = grow(std::move(next))) return d;
                }
                return std::nullopt;
            }
            for (auto w : game_.succ(u)) {
                if (!st.add(w, high(w), budget_)) return std::nullopt;
            }
        }
    }

    std::optional<DominionResult> check(const State& st) const
    {
        DominionResult d;
        d.owner = player_;
        d.set = NodeSet(game_.n());
        d.witness = Strategy(player_, game_.n());
        for (std::size_t t = 0; t < st.members.size(); ++t) {
            d.set.insert(st.members[t]);
            if (st.choice[t] != kNoNode) d.witness.set(st.members[t], st.choice[t]);
        }
        if (!verify_strategy(game_, d.set, d.witness)) return std::nullopt;
        return d;
    }

    const ParityGame& game_;
    DegreeBudget budget_;
    Deadline* deadline_;
    Player player_ = Player::Even;
};

} // namespace

std::optional<DominionResult>
find_dominion_by_odd_nodes(const ParityGame& game, std::size_t ell, const SubSolver& subsolver,
                           const OddNodeOptions& opts)
{
    if (game.n() == 0) return std::nullopt;
    const Player counted = opts.side ? *opts.side : smaller_side(game);
    const auto side = game.nodes_of(counted).to_vector();
    const std::size_t size = std::min(ell, side.size());
    for (Player i : {Player::Even, Player::Odd}) {
        std::vector<std::size_t> pick(size);
        for (std::size_t t = 0; t < size; ++t) pick[t] = t;
        do {
            poll(opts.deadline);
            if (auto d = try_subset(game, side, pick, i, subsolver, opts)) return d;
        } while (next_subset(pick, side.size()));
    }
    return std::nullopt;
}

std::optional<DominionResult>
find_dominion_by_degree(const ParityGame& game, const DegreeBudget& budget, Deadline* deadline)
{
    return DegreeSearch(game, budget, deadline).run();
}

} // namespace pg
