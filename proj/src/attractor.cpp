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
#include "pgfpt/attractor.hpp"

#include <deque>

namespace pg {

bool
is_partition(const ParityGame& game, const SolveResult& r)
{
    const std::size_t n = game.n();
    if (r.w0.universe() != n || r.w1.universe() != n) return false;
    return !r.w0.intersects(r.w1) && (r.w0 | r.w1).size() == n;
}

void
embed(const std::vector<NodeId>& to_parent, const SolveResult& child, SolveResult& parent)
{
    for (auto v : child.w0) parent.w0.insert(to_parent[v]);
    for (auto v : child.w1) parent.w1.insert(to_parent[v]);
    for (int i = 0; i < 2; ++i) {
        const auto& cs = child.strategy(player_of(i));
        if (!cs) continue;
        auto& ps = parent.strategy(player_of(i));
        if (!ps) ps = Strategy(player_of(i), parent.w0.universe());
        for (NodeId v = 0; v < cs->choice.size(); ++v) {
            if (cs->defined(v)) ps->set(to_parent[v], to_parent[(*cs)[v]]);
        }
    }
}

AttractorResult
attractor(const ParityGame& game, const NodeSet& target, Player i, const NodeSet& region)
{
    const std::size_t n = game.n();
    AttractorResult r{target & region, Strategy(i, n)};
    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint8_t> counted(n, 0);
    std::deque<NodeId> queue;
    for (auto v : r.set) queue.push_back(v);
    while (!queue.empty()) {
        NodeId w = queue.front();
        queue.pop_front();
        for (auto u : game.pred(w)) {
            if (!region.contains(u) || r.set.contains(u)) continue;
            if (game.owner(u) == i) {
                r.set.insert(u);
                r.strategy.set(u, w);
                queue.push_back(u);
            } else {
                if (!counted[u]) {
                    counted[u] = 1;
                    for (auto x : game.succ(u)) {
                        if (region.contains(x)) ++count[u];
                    }
                }
                if (--count[u] == 0) {
                    r.set.insert(u);
                    queue.push_back(u);
                }
            }
        }
    }
    return r;
}

AttractorResult
attractor(const ParityGame& game, const NodeSet& target, Player i)
{
    return attractor(game, target, i, game.nodes());
}

NodeId
first_escape(const ParityGame& game, const NodeSet& set, Player i)
{
    for (auto v : set) {
        bool any_in = false, all_in = true;
        for (auto w : game.succ(v)) {
            if (set.contains(w)) any_in = true;
            else all_in = false;
        }
        if (game.owner(v) == i ? !any_in : !all_in) return v;
    }
    return kNoNode;
}

bool
is_closed(const ParityGame& game, const NodeSet& set, Player i)
{
    return first_escape(game, set, i) == kNoNode;
}

} // namespace pg
