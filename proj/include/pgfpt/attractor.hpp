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
#ifndef PGFPT_ATTRACTOR_HPP
#define PGFPT_ATTRACTOR_HPP

#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

struct AttractorResult
{
    NodeSet set;
    /** Defined exactly on the attracted nodes of the attracting player outside the target. */
    Strategy strategy;
};

/**
 * reach_i(target): the least superset of target closed under "i can move in"
 * and "not-i must move in". Linear in m, FIFO order, witness = the successor
 * through which a node was first attracted.
 */
AttractorResult attractor(const ParityGame& game, const NodeSet& target, Player i);

/** Same, inside the sub-game induced by region (edges leaving region are ignored). */
AttractorResult attractor(const ParityGame& game, const NodeSet& target, Player i, const NodeSet& region);

/** i can stay in set, not-i cannot leave it. */
bool is_closed(const ParityGame& game, const NodeSet& set, Player i);

/** First node violating is_closed, or kNoNode. */
NodeId first_escape(const ParityGame& game, const NodeSet& set, Player i);

} // namespace pg

#endif
