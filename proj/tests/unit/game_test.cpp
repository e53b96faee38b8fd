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

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgfpt/errors.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/pgsolver.hpp"

using namespace pg;
using namespace pg::testing;

TEST_CASE("node set algebra")
{
    NodeSet a(70, {1, 5, 64}), b(70, {5, 69});
    CHECK((a | b).to_vector() == std::vector<NodeId>{1, 5, 64, 69});
    CHECK((a & b).to_vector() == std::vector<NodeId>{5});
    CHECK((a - b).to_vector() == std::vector<NodeId>{1, 64});
    CHECK(a.complement().size() == 67);
    CHECK(a.complement().complement() == a);
    CHECK((a & b).is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK(a.find_next(6) == 64);
    CHECK(a.find_next(65) == 70);
    CHECK(NodeSet::full(70).size() == 70);
}

TEST_CASE("player helpers")
{
    CHECK(opponent(opponent(E)) == E);
    CHECK(opponent(O) == E);
    CHECK(p1_value(3) == 3);
    CHECK(p1_value(4) == -4);
    CHECK(p1_value(0) == 0);
    for (Priority a = 0; a <= 100; ++a) {
        for (Priority b = 0; b <= 100; ++b) {
            if (a % 2 != b % 2 || a >= b) continue;
            if (a % 2 == 1) CHECK(p1_value(a) < p1_value(b));
            if (a % 2 == 0) CHECK(p1_value(a) > p1_value(b));
            CHECK(preference(E, a) == -preference(O, a));
        }
    }
}

TEST_CASE("construction sorts, dedups and transposes")
{
    auto g = game_of({{E, 0, {2, 1, 1}}, {O, 3, {0}}, {E, 1, {2, 0}}});
    CHECK(g.m() == 5);
    CHECK(std::vector<NodeId>(g.succ(0).begin(), g.succ(0).end()) == std::vector<NodeId>{1, 2});
    CHECK(std::vector<NodeId>(g.pred(0).begin(), g.pred(0).end()) == std::vector<NodeId>{1, 2});
    CHECK(g.has_edge(2, 2));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(validate(g).ok());
    CHECK_THROWS_AS(game_of({{E, 0, {3}}}), PreconditionViolated);
}

TEST_CASE("validate")
{
    CHECK(validate(game_of({{E, 0, {0}}})).ok());
    auto sink = validate(game_of({{E, 0, {}}}));
    REQUIRE(sink.violations.size() == 1);
    CHECK(sink.violations[0] == "sink node 0");

    auto g = generate(Family::general(), 3, 3, 11);
    for (NodeId cut = 0; cut < 3; ++cut) {
        auto succ = g.successor_lists();
        succ[cut].clear();
        auto r = validate(ParityGame(g.owners(), g.priorities(), succ));
        std::size_t sinks = 0;
        for (NodeId v = 0; v < 3; ++v) sinks += g.succ(v).empty() || v == cut;
        CHECK(r.violations.size() == sinks);
        CHECK(r.violations[0] == "sink node " + std::to_string(cut));
    }

    auto raw = ParityGame::from_raw({E, O}, {0, 1}, {{1, 1}, {0}}, {{1}, {0}});
    CHECK_FALSE(validate(raw).ok());
}

TEST_CASE("bipartiteness")
{
    CHECK(is_bipartite(two_cycle(0, 1)));
    CHECK_FALSE(is_bipartite(game_of({{E, 0, {0}}})));
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto g = generate(Family::bipartite(), 2 + seed % 9, 5, seed);
        bool direct = true;
        for (NodeId v = 0; v < g.n(); ++v) {
            for (auto w : g.succ(v)) direct = direct && g.owner(v) != g.owner(w);
        }
        CHECK(direct);
        CHECK(is_bipartite(g));
    }
}

TEST_CASE("stats")
{
    auto g = game_of({{E, 0, {0}}, {E, 3, {0}}, {E, 3, {0, 1}}, {E, 7, {0, 1, 2, 3, 4}}, {E, 0, {0}}, {O, 1, {0}},
                      {O, 1, {0}}});
    auto s = stats(g);
    CHECK(s.k == 2);
    CHECK(s.owner_of_k == O);
    CHECK(s.p_max == 7);
    CHECK(s.priority_count == 4);

    auto h = game_of({{E, 0, {0}}, {O, 3, {0}}, {E, 3, {0, 1}}, {O, 7, {0, 1, 2, 3, 4}}, {E, 1, {0}}});
    auto t = stats(h);
    CHECK(t.priority_count == 4);
    CHECK(t.k == 2);
    CHECK(t.owner_of_k == O);

    auto d = game_of({{E, 0, {0}}, {E, 0, {0}}, {O, 0, {0, 1}}, {O, 0, {0, 1, 2, 3, 4}}, {E, 0, {0, 1, 2, 3, 4}}});
    auto sd = stats(d);
    CHECK(sd.s(1) == 2);
    CHECK(sd.s(2) == 3);
    CHECK(sd.s(4) == 3);
    CHECK(sd.s(5) == 5);
    CHECK(stats(game_of({{E, 3, {0}}, {E, 0, {0}}, {O, 3, {1}}, {O, 7, {0}}})).priority_count == 3);
}

TEST_CASE("stats invariants on generated games")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto g = generate(Family::general(), 1 + seed % 12, 6, seed);
        auto s = stats(g);
        CHECK(2 * s.k <= s.n);
        CHECK(s.s(s.n) == s.n);
        for (std::size_t j = 1; j <= s.n; ++j) CHECK(s.s(j - 1) <= s.s(j));
    }
}

TEST_CASE("subgame")
{
    auto g = generate(Family::general(), 6, 4, 3);
    auto same = subgame(g, NodeSet(6));
    CHECK(same.game == g);
    for (NodeId v = 0; v < 6; ++v) CHECK(same.to_parent[v] == v);

    CHECK_THROWS_AS(subgame(two_cycle(0, 1), set_of(2, {0})), PreconditionViolated);

    // the complement of an attractor is a trap, so the induced game is well formed
    auto h = game_of({{E, 1, {1, 2}}, {O, 2, {0, 3}}, {E, 0, {2, 3}}, {O, 3, {3, 2}}});
    NodeSet keep = set_of(4, {2, 3});
    auto sub = restrict_to(h, keep);
    CHECK(sub.game == induced(h, keep));
    CHECK(sub.to_parent == std::vector<NodeId>{2, 3});
}

TEST_CASE("subgame composes")
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = generate(Family::general(), 8, 4, seed);
        NodeSet b1(8), b2(8);
        for (NodeId v = 0; v < 8; ++v) {
            if (g.succ(v).size() == 1 && g.succ(v)[0] == v) continue;
            if (v % 3 == 0) b1.insert(v);
            if (v % 3 == 1) b2.insert(v);
        }
        SubGame all, first, second;
        try {
            all = subgame(g, b1 | b2);
            first = subgame(g, b1);
            NodeSet b2c(first.game.n());
            for (auto v : b2) b2c.insert(first.to_child[v]);
            second = subgame(first.game, b2c);
        } catch (const PreconditionViolated&) {
            continue;
        }
        CHECK(second.game == all.game);
        for (NodeId v = 0; v < all.game.n(); ++v) CHECK(first.to_parent[second.to_parent[v]] == all.to_parent[v]);
    }
}

TEST_CASE("swap roles")
{
    auto g = two_cycle(2, 1);
    auto s = swap_roles(g);
    CHECK(s.owner(0) == O);
    CHECK(s.priority(0) == 3);
    CHECK(s.priority(1) == 2);
}

TEST_CASE("generator")
{
    auto one = generate(Family::general(), 1, 1, 99);
    CHECK(one == game_of({{one.owner(0), 0, {0}}}));
    CHECK(stats(generate(Family::unbalanced(2), 10, 4, 5)).k == 2);
    for (auto fam : {Family::general(), Family::bipartite(), Family::bounded_outdegree(2), Family::unbalanced(3)}) {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            auto g = generate(fam, 3 + seed % 20, 6, seed);
            CHECK(validate(g).ok());
            CHECK(to_pgsolver(g) == to_pgsolver(generate(fam, 3 + seed % 20, 6, seed)));
            if (fam.kind == Family::Kind::BoundedOutdegree) {
                for (NodeId v = 0; v < g.n(); ++v) CHECK(g.out_degree(v) <= 2);
            }
            if (fam.kind == Family::Kind::Unbalanced) CHECK(g.count_of(O) == 3);
        }
    }
    CHECK_THROWS_AS(generate(Family::unbalanced(5), 4, 2, 1), InvalidFamilyParams);
    CHECK(Family::parse("bounded:3").name() == "bounded(3)");
    CHECK(Family::parse(Family::unbalanced(2).name()).param == 2);
}
