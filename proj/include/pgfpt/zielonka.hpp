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
#ifndef PGFPT_ZIELONKA_HPP
#define PGFPT_ZIELONKA_HPP

#include "pgfpt/deadline.hpp"
#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

struct ZielonkaStats
{
    std::size_t depth = 0;
    std::size_t calls = 0;
};

/**
 * Recursive solver with strategy synthesis. The recursion runs on an
 * explicit stack over regions of the input game, so depth is bounded only
 * by memory.
 */
SolveResult win(const ParityGame& game, Deadline* deadline = nullptr, ZielonkaStats* stats = nullptr);

} // namespace pg

#endif
