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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgfpt/attractor.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/zielonka.hpp"

using namespace pg;
using namespace pg::testing;

TEST_CASE("zielonka small cases")
{
    CHECK(win(game_of({{E, 0, {0}}})).w0 == NodeSet::full(1));
    CHECK(win(game_of({{E, 1, {0}}})).w1 == NodeSet::full(1));
    CHECK(win(two_cycle(2, 1)).w0 == NodeSet::full(2));
    CHECK(win(ParityGame()).w0.empty());
}

TEST_CASE("zielonka agrees with brute force and certifies")
{
    for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
        auto fam = seed % 2 ? Family::general() : Family::bipartite();
        auto g = generate(fam, 2 + seed % 7, 8, seed);
        auto r = win(g);
        CHECK(r.same_partition(solve_brute(g)));
        CHECK(verify_partition(g, r));
        // top-priority nodes of a winner pick a successor inside the winning set
        for (Player p : {E, O}) {
            for (auto v : r.won(p)) {
                if (g.owner(v) == p) CHECK(r.won(p).contains((*r.strategy(p))[v]));
            }
        }
    }
}

TEST_CASE("removing the opponent's attractor keeps the winning set")
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        auto g = generate(Family::general(), 3 + seed % 6, 6, seed);
        auto r = win(g);
        for (Player i : {E, O}) {
            if (r.won(opponent(i)).empty() || r.won(i).empty()) continue;
            auto a = attractor(g, r.won(opponent(i)), opponent(i)).set;
            auto sub = subgame(g, a);
            auto rs = win(sub.game);
            NodeSet mapped(g.n());
            for (auto v : rs.won(i)) mapped.insert(sub.to_parent[v]);
            CHECK(mapped == r.won(i));
        }
    }
}

TEST_CASE("long chains do not exhaust the stack")
{
    const std::size_t n = 5000;
    std::vector<Player> owners(n, E);
    std::vector<Priority> prios(n);
    std::vector<std::vector<NodeId>> succ(n);
    for (NodeId v = 0; v < n; ++v) {
        prios[v] = v;
        succ[v] = {v == 0 ? 0 : v - 1};
        owners[v] = v % 2 ? O : E;
    }
    ZielonkaStats st;
    auto r = win(ParityGame(owners, prios, succ), nullptr, &st);
    CHECK(r.w0.size() == n);
    CHECK(st.depth >= 2);
}
