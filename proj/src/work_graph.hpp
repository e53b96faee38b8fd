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
#ifndef PGFPT_WORK_GRAPH_HPP
#define PGFPT_WORK_GRAPH_HPP

#include <vector>

#include "pgfpt/game.hpp"
#include "pgfpt/trace.hpp"

namespace pg::detail {

/** Mutable game used by the kernelizers; every mutation is logged to the trace if one is attached. */
class WorkGraph
{
public:
    explicit WorkGraph(const ParityGame& game, ReductionTrace* trace = nullptr);

    std::size_t capacity() const noexcept { return owner_.size(); }
    bool alive(NodeId v) const noexcept { return alive_[v] != 0; }
    Player owner(NodeId v) const noexcept { return owner_[v]; }
    Priority priority(NodeId v) const noexcept { return prio_[v]; }
    const std::vector<NodeId>& succ(NodeId v) const noexcept { return succ_[v]; }
    const std::vector<NodeId>& pred(NodeId v) const noexcept { return pred_[v]; }
    bool has_edge(NodeId u, NodeId v) const;
    std::size_t alive_count() const noexcept { return alive_count_; }
    std::vector<NodeId> alive_nodes() const;

    void remove_dominion(const std::vector<NodeId>& nodes, Player winner);
    void remove_no_predecessor(NodeId v);
    void contract(NodeId kept, NodeId absorbed);
    void delete_edge(NodeId u, NodeId v);
    void add_edge(NodeId u, NodeId v);
    void remap_priorities(const std::vector<std::pair<Priority, Priority>>& remap);
    NodeId add_synthetic(SyntheticKind kind, Player owner, Priority prio, NodeId target);

    void apply(const TraceEvent& e);

    /** Alive nodes in ascending working id, densely renumbered. */
    ParityGame to_game(std::vector<NodeId>* ids = nullptr) const;

private:
    void drop(NodeId v);
    void log(TraceEvent e);

    std::vector<Player> owner_;
    std::vector<Priority> prio_;
    std::vector<std::vector<NodeId>> succ_, pred_;
    std::vector<std::uint8_t> alive_;
    std::size_t alive_count_ = 0;
    ReductionTrace* trace_;
};

} // namespace pg::detail

#endif
