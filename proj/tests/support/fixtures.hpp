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
#ifndef PGFPT_TESTS_FIXTURES_HPP
#define PGFPT_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "pgfpt/game.hpp"

namespace pg::testing {

constexpr Player E = Player::Even;
constexpr Player O = Player::Odd;

struct Node
{
    Player owner;
    Priority priority;
    std::vector<NodeId> succ;
};

inline ParityGame
game_of(std::initializer_list<Node> nodes)
{
    std::vector<Player> owners;
    std::vector<Priority> prios;
    std::vector<std::vector<NodeId>> succ;
    for (const auto& v : nodes) {
        owners.push_back(v.owner);
        prios.push_back(v.priority);
        succ.push_back(v.succ);
    }
    return ParityGame(std::move(owners), std::move(prios), succ);
}

inline NodeSet
set_of(std::size_t n, std::initializer_list<NodeId> ids)
{
    return NodeSet(n, ids);
}

/** Even(a) <-> Odd(b). */
inline ParityGame
two_cycle(Priority a, Priority b)
{
    return game_of({{E, a, {1}}, {O, b, {0}}});
}

} // namespace pg::testing

#endif
