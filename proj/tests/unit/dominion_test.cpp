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
#include "pgfpt/dominion.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/zielonka.hpp"

using namespace pg;
using namespace pg::testing;

namespace {

SolveResult
brute(const ParityGame& g)
{
    return solve_brute(g);
}

void
check_sound(const ParityGame& g, const DominionResult& d)
{
    CHECK_FALSE(d.set.empty());
    CHECK(naive_closed(g, d.set, d.owner));
    CHECK(verify_strategy(g, d.set, d.witness));
    CHECK(strategy_wins(g, d.set, d.witness));
    BruteOptions o;
    o.strategies = false;
    CHECK(solve_brute(induced(g, d.set), o).won(d.owner).size() == d.set.size());

    // removing its attractor leaves a game whose winners are unchanged
    auto a = attractor(g, d.set, d.owner).set;
    if (a.size() == g.n()) return;
    auto sub = subgame(g, a);
    CHECK(validate(sub.game).ok());
    auto before = solve_brute(g, o);
    auto after = solve_brute(sub.game, o);
    for (NodeId v = 0; v < sub.game.n(); ++v) CHECK(after.w0.contains(v) == before.w0.contains(sub.to_parent[v]));
}

} // namespace

TEST_CASE("small dominions by counted nodes")
{
    auto g = two_cycle(2, 1);
    auto d = find_dominion_by_odd_nodes(g, 1, brute);
    REQUIRE(d);
    CHECK(d->owner == E);
    CHECK(d->set == g.nodes());

    auto single = game_of({{O, 1, {0}}});
    auto s = find_dominion_by_odd_nodes(single, 1, brute);
    REQUIRE(s);
    CHECK(s->owner == O);
    CHECK(s->set == single.nodes());
}

TEST_CASE("witness synthesis can be disabled")
{
    OddNodeOptions o;
    o.synthesize_witness = false;
    auto partition_only = [](const ParityGame& g) {
        auto r = solve_brute(g);
        r.strategy0.reset();
        r.strategy1.reset();
        return r;
    };
    auto d = find_dominion_by_odd_nodes(two_cycle(2, 1), 1, partition_only, o);
    REQUIRE(d);
    CHECK(d->witness.choice.empty());
    auto w = find_dominion_by_odd_nodes(two_cycle(2, 1), 1, partition_only);
    REQUIRE(w);
    CHECK(verify_strategy(two_cycle(2, 1), w->set, w->witness));
}

TEST_CASE("counted-node search is complete on small games")
{
    auto check = [](const ParityGame& g) {
        const Player side = smaller_side(g);
        auto doms = all_dominions(g, side, 2);
        for (std::size_t ell : {0, 1, 2}) {
            bool exists = false;
            for (const auto& info : doms) exists = exists || info.side_count <= ell;
            auto d = find_dominion_by_odd_nodes(g, ell, brute);
            CHECK(d.has_value() == exists);
            if (d) check_sound(g, *d);
        }
    };
    for (std::size_t n = 1; n <= 3; ++n) for_each_game(n, 2, check);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto fam = seed % 2 ? Family::general() : Family::bipartite();
        check(generate(fam, 2 + seed % 5, 5, seed));
    }
}

TEST_CASE("degree-budget search")
{
    auto loop = game_of({{E, 0, {0}}});
    auto d = find_dominion_by_degree(loop, {0, 1, 1});
    REQUIRE(d);
    CHECK(d->owner == E);
    CHECK(d->set == loop.nodes());

    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto g = generate(Family::general(), 1 + seed % 6, 4, seed);
        CHECK_FALSE(find_dominion_by_degree(g, {0, 0, 2}));
    }
}

TEST_CASE("degree-budget search is complete on small games")
{
    auto check = [](const ParityGame& g) {
        auto doms = all_dominions(g, Player::Odd, 2);
        for (std::size_t ell = 0; ell <= 2; ++ell) {
            for (std::size_t s = 0; s <= 2; ++s) {
                bool exists = false;
                for (const auto& info : doms) exists = exists || (info.high <= ell && info.low <= s);
                auto d = find_dominion_by_degree(g, {ell, s, 2});
                CHECK(d.has_value() == exists);
                if (d) check_sound(g, *d);
            }
        }
    };
    for (std::size_t n = 1; n <= 3; ++n) for_each_game(n, 2, check);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) check(generate(Family::general(), 2 + seed % 5, 5, seed));
}
