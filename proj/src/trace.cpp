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
#include "pgfpt/trace.hpp"

#include <algorithm>
#include <sstream>

#include "pgfpt/errors.hpp"
#include "work_graph.hpp"

namespace pg {

namespace detail {

namespace {

void
insert_sorted(std::vector<NodeId>& v, NodeId x)
{
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

void
erase_sorted(std::vector<NodeId>& v, NodeId x)
{
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

} // namespace

WorkGraph::WorkGraph(const ParityGame& game, ReductionTrace* trace)
    : owner_(game.owners()), prio_(game.priorities()), succ_(game.n()), pred_(game.n()),
      alive_(game.n(), 1), alive_count_(game.n()), trace_(trace)
{
    for (NodeId v = 0; v < game.n(); ++v) {
        auto s = game.succ(v);
        succ_[v].assign(s.begin(), s.end());
        auto p = game.pred(v);
        pred_[v].assign(p.begin(), p.end());
    }
    if (trace_) trace_->original_nodes = game.n();
}

bool
WorkGraph::has_edge(NodeId u, NodeId v) const
{
    return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
}

std::vector<NodeId>
WorkGraph::alive_nodes() const
{
    std::vector<NodeId> r;
    for (NodeId v = 0; v < capacity(); ++v) {
        if (alive_[v]) r.push_back(v);
    }
    return r;
}

void
WorkGraph::log(TraceEvent e)
{
    if (trace_) trace_->events.push_back(std::move(e));
}

void
WorkGraph::drop(NodeId v)
{
    for (auto w : succ_[v]) erase_sorted(pred_[w], v);
    for (auto u : pred_[v]) erase_sorted(succ_[u], v);
    succ_[v].clear();
    pred_[v].clear();
    alive_[v] = 0;
    --alive_count_;
}

void
WorkGraph::remove_dominion(const std::vector<NodeId>& nodes, Player winner)
{
    if (nodes.empty()) return;
    TraceEvent e;
    e.kind = TraceEvent::Kind::Dominion;
    e.player = winner;
    e.nodes = nodes;
    std::sort(e.nodes.begin(), e.nodes.end());
    for (auto v : e.nodes) drop(v);
    log(std::move(e));
}

void
WorkGraph::remove_no_predecessor(NodeId v)
{
    TraceEvent e;
    e.kind = TraceEvent::Kind::NoPredecessor;
    e.a = v;
    e.player = owner_[v];
    e.nodes = succ_[v];
    drop(v);
    log(std::move(e));
}

void
WorkGraph::contract(NodeId kept, NodeId absorbed)
{
    TraceEvent e;
    e.kind = TraceEvent::Kind::Contracted;
    e.a = kept;
    e.b = absorbed;
    prio_[kept] = std::max(prio_[kept], prio_[absorbed]);
    for (auto u : pred_[absorbed]) {
        if (u == absorbed) continue;
        insert_sorted(succ_[u], kept);
        insert_sorted(pred_[kept], u);
    }
    for (auto w : succ_[absorbed]) {
        NodeId t = w == absorbed ? kept : w;
        insert_sorted(succ_[kept], t);
        insert_sorted(pred_[t], kept);
    }
    drop(absorbed);
    log(std::move(e));
}

void
WorkGraph::delete_edge(NodeId u, NodeId v)
{
    erase_sorted(succ_[u], v);
    erase_sorted(pred_[v], u);
    TraceEvent e;
    e.kind = TraceEvent::Kind::EdgeDeleted;
    e.a = u;
    e.b = v;
    log(std::move(e));
}

void
WorkGraph::add_edge(NodeId u, NodeId v)
{
    insert_sorted(succ_[u], v);
    insert_sorted(pred_[v], u);
    TraceEvent e;
    e.kind = TraceEvent::Kind::EdgeAdded;
    e.a = u;
    e.b = v;
    log(std::move(e));
}

void
WorkGraph::remap_priorities(const std::vector<std::pair<Priority, Priority>>& remap)
{
    for (NodeId v = 0; v < capacity(); ++v) {
        if (!alive_[v]) continue;
        for (const auto& [from, to] : remap) {
            if (prio_[v] == from) {
                prio_[v] = to;
                break;
            }
        }
    }
    TraceEvent e;
    e.kind = TraceEvent::Kind::PriorityRemapped;
    e.remap = remap;
    log(std::move(e));
}

NodeId
WorkGraph::add_synthetic(SyntheticKind kind, Player owner, Priority prio, NodeId target)
{
    NodeId id = static_cast<NodeId>(capacity());
    owner_.push_back(owner);
    prio_.push_back(prio);
    succ_.push_back({target});
    pred_.emplace_back();
    alive_.push_back(1);
    ++alive_count_;
    insert_sorted(pred_[target], id);
    TraceEvent e;
    e.kind = TraceEvent::Kind::Synthetic;
    e.a = id;
    e.b = target;
    e.player = owner;
    e.priority = prio;
    e.synthetic = kind;
    log(std::move(e));
    return id;
}

void
WorkGraph::apply(const TraceEvent& e)
{
    switch (e.kind) {
    case TraceEvent::Kind::Dominion: remove_dominion(e.nodes, e.player); break;
    case TraceEvent::Kind::NoPredecessor: remove_no_predecessor(e.a); break;
    case TraceEvent::Kind::Contracted: contract(e.a, e.b); break;
    case TraceEvent::Kind::EdgeDeleted: delete_edge(e.a, e.b); break;
    case TraceEvent::Kind::EdgeAdded: add_edge(e.a, e.b); break;
    case TraceEvent::Kind::PriorityRemapped: remap_priorities(e.remap); break;
    case TraceEvent::Kind::Synthetic:
        if (add_synthetic(e.synthetic, e.player, e.priority, e.b) != e.a) {
            throw TraceMismatch("synthetic node id out of sequence");
        }
        break;
    }
}

ParityGame
WorkGraph::to_game(std::vector<NodeId>* ids) const
{
    std::vector<NodeId> dense(capacity(), kNoNode);
    std::vector<NodeId> order;
    for (NodeId v = 0; v < capacity(); ++v) {
        if (alive_[v]) {
            dense[v] = static_cast<NodeId>(order.size());
            order.push_back(v);
        }
    }
    std::vector<Player> owners;
    std::vector<Priority> prios;
    std::vector<std::vector<NodeId>> succ;
    for (auto v : order) {
        owners.push_back(owner_[v]);
        prios.push_back(prio_[v]);
        succ.emplace_back();
        for (auto w : succ_[v]) succ.back().push_back(dense[w]);
    }
    if (ids) *ids = order;
    return ParityGame(std::move(owners), std::move(prios), succ);
}

} // namespace detail

std::size_t
ReductionTrace::working_ids() const
{
    std::size_t n = original_nodes;
    for (const auto& e : events) {
        if (e.kind == TraceEvent::Kind::Synthetic) n = std::max<std::size_t>(n, e.a + 1);
    }
    return n;
}

std::string
ReductionTrace::to_text() const
{
    std::ostringstream os;
    os << "NODES " << original_nodes << '\n';
    for (const auto& e : events) {
        switch (e.kind) {
        case TraceEvent::Kind::Dominion:
            os << "DOM " << index_of(e.player);
            for (auto v : e.nodes) os << ' ' << v;
            break;
        case TraceEvent::Kind::NoPredecessor:
            os << "NOPRED " << e.a << ' ' << index_of(e.player);
            for (auto v : e.nodes) os << ' ' << v;
            break;
        case TraceEvent::Kind::Contracted: os << "CONTRACT " << e.a << ' ' << e.b; break;
        case TraceEvent::Kind::EdgeDeleted: os << "EDGEDEL " << e.a << ' ' << e.b; break;
        case TraceEvent::Kind::EdgeAdded: os << "EDGEADD " << e.a << ' ' << e.b; break;
        case TraceEvent::Kind::PriorityRemapped:
            os << "PRIO";
            for (const auto& [from, to] : e.remap) os << ' ' << from << '=' << to;
            break;
        case TraceEvent::Kind::Synthetic:
            os << "SYN " << e.a << ' ' << (e.synthetic == SyntheticKind::EdgeSplit ? "split" : "transit") << ' '
               << index_of(e.player) << ' ' << e.priority << ' ' << e.b;
            break;
        }
        os << '\n';
    }
    os << "KERNEL";
    for (auto v : kernel_nodes) os << ' ' << v;
    os << '\n';
    return os.str();
}

ReductionTrace
ReductionTrace::parse(const std::string& text)
{
    ReductionTrace t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool seen_kernel = false;
    auto read_ids = [&](std::istringstream& ls, std::vector<NodeId>& out) {
        std::uint64_t v;
        while (ls >> v) out.push_back(static_cast<NodeId>(v));
        if (!ls.eof()) throw ParseError(lineno, "expected node ids");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto num = [&]() {
            std::uint64_t v;
            if (!(ls >> v)) throw ParseError(lineno, "expected a number after " + tag);
            return v;
        };
        auto player = [&]() {
            auto v = num();
            if (v > 1) throw ParseError(lineno, "player must be 0 or 1");
            return player_of(static_cast<int>(v));
        };
        TraceEvent e;
        if (tag == "NODES") {
            t.original_nodes = num();
            continue;
        } else if (tag == "KERNEL") {
            read_ids(ls, t.kernel_nodes);
            seen_kernel = true;
            continue;
        } else if (tag == "DOM") {
            e.kind = TraceEvent::Kind::Dominion;
            e.player = player();
            read_ids(ls, e.nodes);
        } else if (tag == "NOPRED") {
            e.kind = TraceEvent::Kind::NoPredecessor;
            e.a = static_cast<NodeId>(num());
            e.player = player();
            read_ids(ls, e.nodes);
        } else if (tag == "CONTRACT" || tag == "EDGEDEL" || tag == "EDGEADD") {
            e.kind = tag == "CONTRACT" ? TraceEvent::Kind::Contracted
                     : tag == "EDGEDEL" ? TraceEvent::Kind::EdgeDeleted
                                        : TraceEvent::Kind::EdgeAdded;
            e.a = static_cast<NodeId>(num());
            e.b = static_cast<NodeId>(num());
        } else if (tag == "PRIO") {
            e.kind = TraceEvent::Kind::PriorityRemapped;
            std::string pair;
            while (ls >> pair) {
                auto eq = pair.find('=');
                if (eq == std::string::npos) throw ParseError(lineno, "expected old=new");
                try {
                    e.remap.emplace_back(static_cast<Priority>(std::stoul(pair.substr(0, eq))),
                                         static_cast<Priority>(std::stoul(pair.substr(eq + 1))));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad priority pair " + pair);
                }
            }
        } else if (tag == "SYN") {
            e.kind = TraceEvent::Kind::Synthetic;
            e.a = static_cast<NodeId>(num());
            std::string kind;
            ls >> kind;
            if (kind == "split") e.synthetic = SyntheticKind::EdgeSplit;
            else if (kind == "transit") e.synthetic = SyntheticKind::Transit;
            else throw ParseError(lineno, "unknown synthetic kind " + kind);
            e.player = player();
            e.priority = static_cast<Priority>(num());
            e.b = static_cast<NodeId>(num());
        } else {
            throw ParseError(lineno, "unknown event " + tag);
        }
        t.events.push_back(std::move(e));
    }
    if (!seen_kernel) throw ParseError(lineno, "missing KERNEL line");
    return t;
}

ParityGame
replay(const ParityGame& original, const ReductionTrace& trace)
{
    if (original.n() != trace.original_nodes) throw TraceMismatch("trace was recorded on a game of another size");
    detail::WorkGraph g(original);
    for (const auto& e : trace.events) g.apply(e);
    std::vector<NodeId> ids;
    ParityGame k = g.to_game(&ids);
    if (ids != trace.kernel_nodes) throw TraceMismatch("replayed kernel nodes differ from the recorded ones");
    return k;
}

SolveResult
lift_solution(const ReductionTrace& trace, const SolveResult& kernel_result)
{
    const std::size_t kn = trace.kernel_nodes.size();
    if (kernel_result.w0.universe() != kn || kernel_result.w1.universe() != kn ||
        kernel_result.w0.intersects(kernel_result.w1) || (kernel_result.w0 | kernel_result.w1).size() != kn) {
        throw TraceMismatch("kernel result does not cover the kernel nodes");
    }
    std::vector<std::int8_t> winner(trace.working_ids(), -1);
    for (std::size_t i = 0; i < kn; ++i) {
        winner[trace.kernel_nodes[i]] = kernel_result.w0.contains(static_cast<NodeId>(i)) ? 0 : 1;
    }
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        const auto& e = *it;
        switch (e.kind) {
        case TraceEvent::Kind::Dominion:
            for (auto v : e.nodes) winner[v] = static_cast<std::int8_t>(index_of(e.player));
            break;
        case TraceEvent::Kind::NoPredecessor: {
            const auto j = static_cast<std::int8_t>(index_of(e.player));
            bool any = std::any_of(e.nodes.begin(), e.nodes.end(), [&](NodeId w) { return winner[w] == j; });
            winner[e.a] = any ? j : static_cast<std::int8_t>(1 - j);
            break;
        }
        case TraceEvent::Kind::Contracted: winner[e.b] = winner[e.a]; break;
        default: break;
        }
    }
    SolveResult r(trace.original_nodes);
    for (NodeId v = 0; v < trace.original_nodes; ++v) {
        if (winner[v] < 0) throw TraceMismatch("node " + std::to_string(v) + " has no recorded fate");
        (winner[v] == 0 ? r.w0 : r.w1).insert(v);
    }
    return r;
}

} // namespace pg
