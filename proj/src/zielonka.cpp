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
#include "pgfpt/zielonka.hpp"

#include <vector>

#include "pgfpt/attractor.hpp"

namespace pg {

namespace {

struct Frame
{
    explicit Frame(NodeSet r) : region(std::move(r)) { }

    NodeSet region;
    int stage = 0;
    Player i = Player::Even;
    NodeSet top;  // nodes of maximal priority
    NodeSet attr; // reach_i(top), then reach_{not i}(W'_{not i})
    Strategy attr_strategy;
};

} // namespace

SolveResult
win(const ParityGame& game, Deadline* deadline, ZielonkaStats* stats)
{
    const std::size_t n = game.n();
    Strategy strat[2] = {Strategy(Player::Even, n), Strategy(Player::Odd, n)};
    NodeSet ret[2] = {NodeSet(n), NodeSet(n)};

    std::vector<Frame> stack;
    stack.emplace_back(game.nodes());
    while (!stack.empty()) {
        poll(deadline);
        if (stats) stats->depth = std::max(stats->depth, stack.size());
        Frame& f = stack.back();
        if (f.stage == 0) {
            if (stats) ++stats->calls;
            if (f.region.empty()) {
                ret[0].clear();
                ret[1].clear();
                stack.pop_back();
                continue;
            }
            Priority d = 0;
            for (auto v : f.region) d = std::max(d, game.priority(v));
            f.i = parity_of(d);
            f.top = NodeSet(n);
            for (auto v : f.region) {
                if (game.priority(v) == d) f.top.insert(v);
            }
            auto a = attractor(game, f.top, f.i, f.region);
            f.attr = std::move(a.set);
            f.attr_strategy = std::move(a.strategy);
            f.stage = 1;
            NodeSet sub = f.region - f.attr;
            stack.emplace_back(std::move(sub));
            continue;
        }
        const int i = index_of(f.i);
        const int o = 1 - i;
        if (f.stage == 1) {
            if (ret[o].empty()) {
                for (auto v : f.attr) {
                    if (f.attr_strategy.defined(v)) strat[i].set(v, f.attr_strategy[v]);
                }
                for (auto v : f.top) {
                    if (game.owner(v) != f.i) continue;
                    for (auto w : game.succ(v)) {
                        if (f.region.contains(w)) {
                            strat[i].set(v, w);
                            break;
                        }
                    }
                }
                ret[i] = f.region;
                ret[o].clear();
                stack.pop_back();
                continue;
            }
            auto b = attractor(game, ret[o], opponent(f.i), f.region);
            for (auto v : b.set) {
                if (b.strategy.defined(v)) strat[o].set(v, b.strategy[v]);
            }
            f.attr = std::move(b.set);
            f.stage = 2;
            NodeSet sub = f.region - f.attr;
            stack.emplace_back(std::move(sub));
            continue;
        }
        ret[o] |= f.attr;
        stack.pop_back();
    }

    SolveResult r(n);
    r.w0 = ret[0];
    r.w1 = ret[1];
    for (int p = 0; p < 2; ++p) {
        const NodeSet& W = p == 0 ? r.w0 : r.w1;
        for (NodeId v = 0; v < n; ++v) {
            if (!(W.contains(v) && game.owner(v) == player_of(p))) strat[p].clear(v);
        }
    }
    r.strategy0 = std::move(strat[0]);
    r.strategy1 = std::move(strat[1]);
    return r;
}

} // namespace pg
