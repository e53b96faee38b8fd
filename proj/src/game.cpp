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
#include "pgfpt/game.hpp"

#include <algorithm>
#include <set>

#include "pgfpt/errors.hpp"

namespace pg {

namespace {

void
build_csr(const std::vector<std::vector<NodeId>>& lists, std::vector<std::uint32_t>& off,
          std::vector<NodeId>& adj)
{
    off.assign(lists.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        total += lists[v].size();
        off[v + 1] = static_cast<std::uint32_t>(total);
    }
    adj.clear();
    adj.reserve(total);
    for (const auto& l : lists) adj.insert(adj.end(), l.begin(), l.end());
}

} // namespace

ParityGame::ParityGame(std::vector<Player> owners, std::vector<Priority> priorities,
                       const std::vector<std::vector<NodeId>>& successors)
    : owner_(std::move(owners)), prio_(std::move(priorities))
{
    const std::size_t n = owner_.size();
    if (prio_.size() != n || successors.size() != n) {
        throw PreconditionViolated("owner, priority and successor vectors differ in length");
    }
    std::vector<std::vector<NodeId>> out(successors);
    std::vector<std::uint32_t> indeg(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& l = out[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        for (auto w : l) {
            if (w >= n) {
                throw PreconditionViolated("edge " + std::to_string(v) + "->" + std::to_string(w) +
                                           " leaves the node range");
            }
            ++indeg[w];
        }
    }
    build_csr(out, out_off_, out_adj_);

    in_off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) in_off_[v + 1] = in_off_[v] + indeg[v];
    in_adj_.assign(out_adj_.size(), 0);
    std::vector<std::uint32_t> fill(in_off_.begin(), in_off_.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
        for (auto w : out[v]) in_adj_[fill[w]++] = static_cast<NodeId>(v);
    }
}

ParityGame
ParityGame::from_raw(std::vector<Player> owners, std::vector<Priority> priorities,
                     const std::vector<std::vector<NodeId>>& successors,
                     const std::vector<std::vector<NodeId>>& predecessors)
{
    if (priorities.size() != owners.size() || successors.size() != owners.size() ||
        predecessors.size() != owners.size()) {
        throw PreconditionViolated("raw game vectors differ in length");
    }
    ParityGame g;
    g.owner_ = std::move(owners);
    g.prio_ = std::move(priorities);
    build_csr(successors, g.out_off_, g.out_adj_);
    build_csr(predecessors, g.in_off_, g.in_adj_);
    return g;
}

bool
ParityGame::has_edge(NodeId u, NodeId v) const noexcept
{
    auto s = succ(u);
    return std::binary_search(s.begin(), s.end(), v);
}

NodeSet
ParityGame::nodes_of(Player p) const
{
    NodeSet s(n());
    for (NodeId v = 0; v < n(); ++v) {
        if (owner_[v] == p) s.insert(v);
    }
    return s;
}

std::size_t
ParityGame::count_of(Player p) const noexcept
{
    return static_cast<std::size_t>(std::count(owner_.begin(), owner_.end(), p));
}

Priority
ParityGame::max_priority() const noexcept
{
    return prio_.empty() ? 0 : *std::max_element(prio_.begin(), prio_.end());
}

std::vector<std::vector<NodeId>>
ParityGame::successor_lists() const
{
    std::vector<std::vector<NodeId>> out(n());
    for (NodeId v = 0; v < n(); ++v) {
        auto s = succ(v);
        out[v].assign(s.begin(), s.end());
    }
    return out;
}

ValidationReport
validate(const ParityGame& game)
{
    ValidationReport r;
    const std::size_t n = game.n();
    std::multiset<std::pair<NodeId, NodeId>> forward, backward;
    for (NodeId v = 0; v < n; ++v) {
        auto s = game.succ(v);
        if (s.empty()) r.violations.push_back("sink node " + std::to_string(v));
        std::set<NodeId> seen;
        for (auto w : s) {
            if (w >= n) {
                r.violations.push_back("dangling edge " + std::to_string(v) + "->" + std::to_string(w));
                continue;
            }
            if (!seen.insert(w).second) {
                r.violations.push_back("duplicate edge " + std::to_string(v) + "->" + std::to_string(w));
            }
            forward.emplace(v, w);
        }
        for (auto u : game.pred(v)) {
            if (u < n) backward.emplace(u, v);
        }
    }
    if (forward != backward) {
        for (const auto& e : forward) {
            if (forward.count(e) != backward.count(e)) {
                r.violations.push_back("transpose mismatch at edge " + std::to_string(e.first) + "->" +
                                       std::to_string(e.second));
            }
        }
        for (const auto& e : backward) {
            if (forward.count(e) == 0) {
                r.violations.push_back("transpose mismatch at edge " + std::to_string(e.first) + "->" +
                                       std::to_string(e.second));
            }
        }
    }
    return r;
}

bool
is_bipartite(const ParityGame& game)
{
    for (NodeId v = 0; v < game.n(); ++v) {
        for (auto w : game.succ(v)) {
            if (game.owner(v) == game.owner(w)) return false;
        }
    }
    return true;
}

Player
smaller_side(const ParityGame& game) noexcept
{
    return game.count_of(Player::Even) < game.count_of(Player::Odd) ? Player::Even : Player::Odd;
}

std::size_t
distinct_priorities(const ParityGame& game)
{
    std::vector<Priority> p(game.priorities());
    std::sort(p.begin(), p.end());
    return static_cast<std::size_t>(std::unique(p.begin(), p.end()) - p.begin());
}

GameStats
stats(const ParityGame& game)
{
    GameStats s;
    s.n = game.n();
    s.m = game.m();
    const std::size_t even = game.count_of(Player::Even);
    const std::size_t odd = s.n - even;
    s.owner_of_k = even < odd ? Player::Even : Player::Odd;
    s.k = std::min(even, odd);
    s.priority_count = distinct_priorities(game);
    s.p_max = game.max_priority();
    s.s_of.assign(s.n + 1, 0);
    for (NodeId v = 0; v < s.n; ++v) {
        auto d = game.out_degree(v);
        if (d <= s.n) ++s.s_of[d];
    }
    for (std::size_t j = 1; j <= s.n; ++j) s.s_of[j] += s.s_of[j - 1];
    return s;
}

SubGame
subgame(const ParityGame& game, const NodeSet& remove)
{
    SubGame r;
    const std::size_t n = game.n();
    r.to_child.assign(n, kNoNode);
    for (NodeId v = 0; v < n; ++v) {
        if (!remove.contains(v)) {
            r.to_child[v] = static_cast<NodeId>(r.to_parent.size());
            r.to_parent.push_back(v);
        }
    }
    const std::size_t cn = r.to_parent.size();
    std::vector<Player> owners(cn);
    std::vector<Priority> prios(cn);
    std::vector<std::vector<NodeId>> succ(cn);
    for (NodeId c = 0; c < cn; ++c) {
        NodeId v = r.to_parent[c];
        owners[c] = game.owner(v);
        prios[c] = game.priority(v);
        for (auto w : game.succ(v)) {
            if (r.to_child[w] != kNoNode) succ[c].push_back(r.to_child[w]);
        }
        if (succ[c].empty()) {
            throw PreconditionViolated("node " + std::to_string(v) + " has no successor in the sub-game");
        }
    }
    r.game = ParityGame(std::move(owners), std::move(prios), succ);
    return r;
}

SubGame
restrict_to(const ParityGame& game, const NodeSet& keep)
{
    return subgame(game, keep.complement());
}

ParityGame
swap_roles(const ParityGame& game)
{
    std::vector<Player> owners(game.n());
    std::vector<Priority> prios(game.n());
    for (NodeId v = 0; v < game.n(); ++v) {
        owners[v] = opponent(game.owner(v));
        prios[v] = game.priority(v) + 1;
    }
    return ParityGame(std::move(owners), std::move(prios), game.successor_lists());
}

} // namespace pg
