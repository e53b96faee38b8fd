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
#include <doctest.h>

#include <deque>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgfpt/attractor.hpp"
#include "pgfpt/generate.hpp"

using namespace pg;
using namespace pg::testing;

namespace {

/** BFS distance to target along the witness moves and forced moves. */
bool
ranks_decrease(const ParityGame& g, const NodeSet& target, Player i, const AttractorResult& a)
{
    std::vector<std::size_t> rank(g.n(), SIZE_MAX);
    for (auto v : target) rank[v] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto v : a.set) {
            if (target.contains(v)) continue;
            std::size_t r = SIZE_MAX;
            if (g.owner(v) == i) {
                if (rank[a.strategy[v]] != SIZE_MAX) r = rank[a.strategy[v]] + 1;
            } else {
                std::size_t worst = 0;
                for (auto w : g.succ(v)) worst = std::max(worst, rank[w]);
                if (worst != SIZE_MAX) r = worst + 1;
            }
            if (r < rank[v]) {
                rank[v] = r;
                changed = true;
            }
        }
    }
    for (auto v : a.set) {
        if (rank[v] == SIZE_MAX) return false;
    }
    return true;
}

} // namespace

TEST_CASE("attractor edge cases")
{
    auto g = two_cycle(0, 1);
    auto all = attractor(g, g.nodes(), E);
    CHECK(all.set == g.nodes());
    CHECK_FALSE(all.strategy.defined(0));
    CHECK(attractor(g, NodeSet(2), E).set.empty());
    CHECK(attractor(g, set_of(2, {1}), O).set == g.nodes());
}

TEST_CASE("closedness")
{
    auto g = two_cycle(0, 1);
    CHECK(is_closed(g, g.nodes(), E));
    auto loop = game_of({{E, 0, {0}}});
    CHECK(is_closed(loop, loop.nodes(), E));
    CHECK(is_closed(loop, loop.nodes(), O));
    auto h = game_of({{E, 0, {0, 1}}, {O, 1, {1}}});
    CHECK(is_closed(h, set_of(2, {0}), E));
    CHECK_FALSE(is_closed(h, set_of(2, {0}), O));
    CHECK(first_escape(h, set_of(2, {0}), O) == 0);
}

TEST_CASE("attractor matches the fixpoint oracle and its properties hold")
{
    for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
        auto fam = seed % 2 ? Family::general() : Family::bipartite();
        auto g = generate(fam, 2 + seed % 7, 5, seed);
        NodeSet a(g.n()), b(g.n());
        for (NodeId v = 0; v < g.n(); ++v) {
            if ((seed >> v) % 3 == 0) a.insert(v);
            if ((seed >> v) % 3 != 2) b.insert(v);
        }
        b |= a;
        for (Player i : {E, O}) {
            auto ra = attractor(g, a, i);
            CHECK(ra.set == naive_attractor(g, a, i));
            CHECK(a.is_subset_of(ra.set));
            CHECK(ra.set.is_subset_of(attractor(g, b, i).set));
            CHECK(attractor(g, ra.set, i).set == ra.set);
            CHECK(is_closed(g, ra.set.complement(), opponent(i)));
            CHECK(naive_closed(g, ra.set.complement(), opponent(i)));
            CHECK(ranks_decrease(g, a, i, ra));
            for (auto v : ra.set) {
                if (!a.contains(v) && g.owner(v) == i) CHECK(ra.set.contains(ra.strategy[v]));
            }
        }
    }
}

TEST_CASE("attractor inside a region ignores outside edges")
{
    auto g = game_of({{E, 0, {1, 2}}, {O, 0, {2}}, {O, 0, {0}}});
    NodeSet region = set_of(3, {0, 1});
    CHECK(attractor(g, set_of(3, {1}), O).set == set_of(3, {1}));
    CHECK(attractor(g, set_of(3, {1}), O, region).set == region);
    CHECK(attractor(g, set_of(3, {1}), E, region).set == region);
}
