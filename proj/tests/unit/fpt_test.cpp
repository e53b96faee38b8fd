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

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgfpt/errors.hpp"
#include "pgfpt/fpt.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/pgsolver.hpp"
#include "pgfpt/zielonka.hpp"

using namespace pg;
using namespace pg::testing;

namespace {

ParityGame
uniform_degree(std::size_t n, std::size_t d)
{
    std::vector<Player> owners(n);
    std::vector<Priority> prios(n);
    std::vector<std::vector<NodeId>> succ(n);
    for (NodeId v = 0; v < n; ++v) {
        owners[v] = v % 2 ? O : E;
        prios[v] = v % 5;
        for (std::size_t t = 0; t < d; ++t) succ[v].push_back(static_cast<NodeId>((v + 1 + t) % n));
    }
    return ParityGame(owners, prios, succ);
}

} // namespace

TEST_CASE("parameter formulas")
{
    for (std::size_t k = 0; k <= 2000; ++k) {
        const std::size_t l = odd_budget(k);
        CHECK(l * l <= 2 * k);
        CHECK(2 * k < (l + 1) * (l + 1));
    }
    CHECK(odd_budget(8) == 4);
    CHECK(high_budget(10, 10) == 0);
    CHECK(high_budget(10, 8) == 2);
    CHECK(high_budget(10, 7) == 3);
    CHECK(low_budget(0, 2) == 0);
    CHECK(low_budget(1, 2) == 0);
    CHECK(low_budget(16, 2) == 8);
    CHECK(low_budget(9, 3) == 5);
    CHECK(low_budget(2, 3) == 2);
    CHECK(low_budget(100, 2) == 26);
}

TEST_CASE("choosing the degree threshold")
{
    auto low = uniform_degree(100, 2);
    auto c = choose_j(low);
    CHECK(c.j == 2);
    CHECK(c.score == doctest::Approx(std::sqrt(100.0 / std::log2(100.0))).epsilon(1e-12));
    CHECK(c.score == doctest::Approx(3.88).epsilon(0.001));

    // every threshold scores sqrt(n) on a complete graph; the smallest wins the tie
    auto complete = uniform_degree(30, 30);
    for (std::size_t j = 2; j <= 30; ++j) {
        CHECK(degree_score(30, stats(complete).s(j), j) == doctest::Approx(std::sqrt(30.0)));
    }
    CHECK(choose_j(complete).j == 2);

    CHECK(choose_j(two_cycle(0, 1)).j == 2);
    CHECK_THROWS_AS(choose_j(game_of({{E, 0, {0}}})), PreconditionViolated);
}

TEST_CASE("small fixed cases")
{
    CHECK(new_win1(two_cycle(2, 1)).w0 == NodeSet::full(2));
    CHECK(new_win2(two_cycle(2, 1), 2).w0 == NodeSet::full(2));
    CHECK(old_win1(game_of({{O, 1, {0}}})).w1 == NodeSet::full(1));
    auto even_top = game_of({{E, 4, {1}}, {O, 1, {0, 2}}, {E, 2, {1}}});
    CHECK(old_win1(even_top).w0 == even_top.nodes());
    CHECK(new_win1(ParityGame()).w0.empty());
    CHECK_THROWS_AS(new_win2(two_cycle(2, 1), 1), PreconditionViolated);
}

TEST_CASE("four-way agreement on seeded games")
{
    for (auto fam : {Family::general(), Family::bipartite(), Family::unbalanced(3), Family::bounded_outdegree(2)}) {
        for (std::uint64_t seed = 1; seed <= 400; ++seed) {
            const std::size_t n = 3 + seed % 6;
            auto g = generate(fam, n, 2 + seed % 6, seed);
            auto truth = solve_brute(g);
            INFO(fam.name(), " seed ", seed, "\n", to_pgsolver(g));
            FptStats st;
            auto r1 = new_win1(g, {}, &st);
            CHECK(r1.same_partition(truth));
            CHECK(win(g).same_partition(truth));
            for (std::size_t j = 2; j <= n; ++j) CHECK(new_win2(g, j).same_partition(truth));

            FptConfig plain;
            plain.kernelize = false;
            CHECK(new_win1(g, plain).same_partition(truth));
            FptConfig no_search;
            no_search.dominion_search = false;
            CHECK(new_win1(g, no_search).same_partition(truth));
            CHECK(old_win1(g, no_search).same_partition(truth));
            CHECK(new_win2(g, 2, no_search).same_partition(truth));
        }
    }
}

TEST_CASE("roles swap when Even is the smaller side")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto g = swap_roles(generate(Family::unbalanced(1 + seed % 3), 8, 5, seed));
        REQUIRE(smaller_side(g) == E);
        auto truth = solve_brute(g);
        CHECK(solve(g, Algorithm::FptK).same_partition(truth));
        CHECK(solve(g, Algorithm::FptDegree).same_partition(truth));
    }
}

TEST_CASE("larger games agree with zielonka")
{
    for (auto fam : {Family::general(), Family::bipartite(), Family::unbalanced(5)}) {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            auto g = generate(fam, 12 + seed % 10, 6, seed);
            auto z = win(g);
            FptStats st;
            CHECK(solve(g, Algorithm::FptK, {}, &st).same_partition(z));
            CHECK(st.guard_checks + st.calls > 0);
            FptConfig small_j;
            small_j.sub_j = 2;
            CHECK(solve(g, Algorithm::FptDegree, small_j).same_partition(z));
        }
    }
}

TEST_CASE("dispatch")
{
    auto g = generate(Family::general(), 7, 4, 5);
    auto r = solve(g, Algorithm::Brute);
    for (auto a : {Algorithm::Zielonka, Algorithm::FptK, Algorithm::FptDegree}) CHECK(solve(g, a).same_partition(r));
    CHECK(solve(g, Algorithm::Zielonka).strategy0.has_value());
    CHECK(solve(g, Algorithm::Brute).strategy1.has_value());
    CHECK(parse_algorithm("fpt-degree") == Algorithm::FptDegree);
    CHECK_FALSE(parse_algorithm("nope"));

    // everything disappears during kernelization
    auto gone = game_of({{E, 4, {1}}, {E, 1, {0}}, {E, 0, {0, 3}}, {O, 1, {2}}, {O, 1, {2}}});
    CHECK(solve(gone, Algorithm::FptK).w0 == gone.nodes());
}
