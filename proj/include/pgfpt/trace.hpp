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
#ifndef PGFPT_TRACE_HPP
#define PGFPT_TRACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

enum class SyntheticKind { EdgeSplit, Transit };

/**
 * One kernelization step. Node ids are working ids: the original ids
 * 0..n-1 followed by synthetic nodes in creation order.
 */
struct TraceEvent
{
    enum class Kind { Dominion, NoPredecessor, Contracted, EdgeDeleted, EdgeAdded, PriorityRemapped, Synthetic };

    Kind kind = Kind::Dominion;
    /** Dominion: winner. NoPredecessor: owner of the removed node. Synthetic: owner. */
    Player player = Player::Even;
    /** Dominion: removed set. NoPredecessor: successors at removal time. */
    std::vector<NodeId> nodes;
    /** NoPredecessor: removed node. Contracted: kept. Edge events: source. Synthetic: new id. */
    NodeId a = kNoNode;
    /** Contracted: absorbed. Edge events: target. Synthetic: the single successor. */
    NodeId b = kNoNode;
    /** Synthetic: priority. */
    Priority priority = 0;
    SyntheticKind synthetic = SyntheticKind::Transit;
    /** PriorityRemapped: old -> new pairs. */
    std::vector<std::pair<Priority, Priority>> remap;

    bool operator==(const TraceEvent&) const = default;
};

struct ReductionTrace
{
    std::size_t original_nodes = 0;
    std::vector<TraceEvent> events;
    /** Working id of every kernel node, in kernel id order. */
    std::vector<NodeId> kernel_nodes;

    std::size_t working_ids() const;

    /** Line format: NODES, then DOM/NOPRED/CONTRACT/EDGEDEL/EDGEADD/PRIO/SYN lines, then KERNEL. */
    std::string to_text() const;
    static ReductionTrace parse(const std::string& text);

    bool operator==(const ReductionTrace&) const = default;
};

/** Re-applies the events to the original game; yields the kernel. */
ParityGame replay(const ParityGame& original, const ReductionTrace& trace);

/**
 * Winning sets on the original game from winning sets on the kernel.
 * Strategies are not lifted. Throws TraceMismatch on a size mismatch.
 */
SolveResult lift_solution(const ReductionTrace& trace, const SolveResult& kernel_result);

} // namespace pg

#endif
