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
#include "pgfpt/errors.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/pgsolver.hpp"

using namespace pg;
using namespace pg::testing;

TEST_CASE("parse with and without header")
{
    auto g = parse_pgsolver("parity 1;\nstart 0;\n0 2 0 1 \"a\";\n1 1 1 0,1;\n");
    CHECK(g == game_of({{E, 2, {1}}, {O, 1, {0, 1}}}));
    CHECK(parse_pgsolver("0 2 0 1;\n1 1 1 0;\n") == two_cycle(2, 1));
}

TEST_CASE("round trip")
{
    for (auto fam : {Family::general(), Family::bipartite(), Family::unbalanced(2)}) {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            auto g = generate(fam, 2 + seed % 30, 8, seed);
            auto text = to_pgsolver(g);
            CHECK(parse_pgsolver(text) == g);
            CHECK(to_pgsolver(parse_pgsolver(text)) == text);
        }
    }
}

TEST_CASE("parse errors name the line")
{
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_pgsolver(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("parity x;\n") == 1);
    CHECK(line_of("0 1 0 0;\n0 1 0 0;\n") == 2);
    CHECK(line_of("0 1 2 0;\n") == 1);
    CHECK(line_of("parity 0;\n0 1 0 0;\n1 1 0 0;\n") == 3);
    CHECK(line_of("0 1 0 0\n") == 1);
}

TEST_CASE("structural problems survive parsing")
{
    CHECK_FALSE(validate(parse_pgsolver("parity 1;\n0 0 0 0;\n")).ok());
    CHECK_FALSE(validate(parse_pgsolver("0 0 0 5;\n")).ok());
}
