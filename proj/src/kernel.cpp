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
#include "pgfpt/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "pgfpt/attractor.hpp"
#include "pgfpt/errors.hpp"
#include "pgfpt/oracle.hpp"
#include "work_graph.hpp"

namespace pg {

using detail::WorkGraph;

namespace {

/** Transit nodes v(p,w): one large-side node per (priority, small-side target). */
class TransitTable
{
public:
    TransitTable(WorkGraph& g, Player small) : g_(g), small_(small) { }

    bool shaped(NodeId v) const
    {
        return g_.alive(v) && g_.owner(v) != small_ && g_.succ(v).size() == 1 && g_.owner(g_.succ(v)[0]) == small_;
    }

    void rebuild()
    {
        table_.clear();
        registered_.assign(g_.capacity(), 0);
        for (NodeId v = 0; v < g_.capacity(); ++v) {
            if (shaped(v) && table_.emplace(std::make_pair(g_.priority(v), g_.succ(v)[0]), v).second) {
                registered_[v] = 1;
            }
        }
    }

    NodeId get(Priority q, NodeId w, SyntheticKind kind)
    {
        auto it = table_.find({q, w});
        if (it != table_.end()) return it->second;
        NodeId t = g_.add_synthetic(kind, opponent(small_), q, w);
        table_.emplace(std::make_pair(q, w), t);
        registered_.resize(g_.capacity(), 0);
        registered_[t] = 1;
        return t;
    }

    bool registered(NodeId v) const { return v < registered_.size() && registered_[v]; }

private:
    WorkGraph& g_;
    Player small_;
    std::map<std::pair<Priority, NodeId>, NodeId> table_;
    std::vector<std::uint8_t> registered_;
};

std::vector<NodeId>
to_working(const std::vector<NodeId>& ids, const NodeSet& set)
{
    std::vector<NodeId> out;
    for (auto v : set) out.push_back(ids[v]);
    return out;
}

/** Removes reach_p(seed) of the current graph as a p-dominion. */
void
remove_attracted(WorkGraph& g, const std::vector<NodeId>& seed, Player p)
{
    if (seed.empty()) return;
    std::vector<NodeId> ids;
    ParityGame cur = g.to_game(&ids);
    std::vector<NodeId> dense(g.capacity(), kNoNode);
    for (NodeId i = 0; i < ids.size(); ++i) dense[ids[i]] = i;
    NodeSet target(cur.n());
    for (auto v : seed) target.insert(dense[v]);
    g.remove_dominion(to_working(ids, attractor(cur, target, p).set), p);
}

void
split_small_side_edges(WorkGraph& g, TransitTable& transits, Player small)
{
    const auto cap = static_cast<NodeId>(g.capacity());
    for (NodeId v = 0; v < cap; ++v) {
        if (!g.alive(v) || g.owner(v) != small) continue;
        const std::vector<NodeId> succ = g.succ(v);
        for (auto w : succ) {
            if (g.owner(w) != small) continue;
            NodeId t = transits.get(g.priority(w), w, SyntheticKind::EdgeSplit);
            g.delete_edge(v, w);
            g.add_edge(v, t);
        }
    }
}

void
remove_closed_cycles(WorkGraph& g, Player small)
{
    const Player big = opponent(small);
    // large-side nodes that can stay on their side forever with a winning cycle
    std::vector<NodeId> side, loc(g.capacity(), kNoNode);
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (g.alive(v) && g.owner(v) == big) {
            loc[v] = static_cast<NodeId>(side.size());
            side.push_back(v);
        }
    }
    std::vector<Player> owners(side.size(), big);
    std::vector<Priority> prios;
    std::vector<std::vector<NodeId>> succ(side.size());
    for (NodeId i = 0; i < side.size(); ++i) {
        prios.push_back(g.priority(side[i]));
        for (auto w : g.succ(side[i])) {
            if (loc[w] != kNoNode) succ[i].push_back(loc[w]);
        }
    }
    ParityGame inner(std::move(owners), std::move(prios), succ);
    auto sol = detail::solitary(inner, big, inner.nodes(), nullptr);
    remove_attracted(g, to_working(side, sol.win), big);

    // large-side nodes that cannot reach the small side at all; removing
    // them can strand more, so repeat
    while (true) {
        std::vector<std::uint8_t> reach(g.capacity(), 0);
        std::deque<NodeId> queue;
        for (NodeId v = 0; v < g.capacity(); ++v) {
            if (g.alive(v) && g.owner(v) == small) {
                reach[v] = 1;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            NodeId y = queue.front();
            queue.pop_front();
            for (auto u : g.pred(y)) {
                if (g.owner(u) == big && !reach[u]) {
                    reach[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::vector<NodeId> stuck;
        for (NodeId v = 0; v < g.capacity(); ++v) {
            if (g.alive(v) && !reach[v]) stuck.push_back(v);
        }
        if (stuck.empty()) break;
        remove_attracted(g, stuck, small);
    }
}

void
route_through_transits(WorkGraph& g, TransitTable& transits, Player small)
{
    const Player big = opponent(small);
    transits.rebuild();

    std::vector<Priority> levels;
    for (auto v : g.alive_nodes()) levels.push_back(g.priority(v));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    auto level_of = [&](Priority p) {
        return static_cast<std::uint32_t>(std::lower_bound(levels.begin(), levels.end(), p) - levels.begin());
    };
    const std::size_t L = levels.size();
    const std::size_t cap = g.capacity();

    // best path priority per (source, target), computed on the unmodified graph
    std::vector<std::pair<NodeId, std::vector<std::pair<NodeId, Priority>>>> routes;
    std::vector<std::uint32_t> stamp(cap * L, 0), best_stamp(cap, 0);
    std::vector<Priority> best(cap, 0);
    std::uint32_t round = 0;
    std::vector<std::pair<NodeId, std::uint32_t>> queue;
    for (NodeId v = 0; v < cap; ++v) {
        if (!g.alive(v) || g.owner(v) != big || transits.registered(v)) continue;
        ++round;
        std::vector<NodeId> targets;
        queue.assign(1, {v, level_of(g.priority(v))});
        stamp[v * L + queue[0].second] = round;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto [x, q] = queue[qi];
            for (auto y : g.succ(x)) {
                if (g.owner(y) == small) {
                    Priority pr = levels[q];
                    if (best_stamp[y] != round) {
                        best_stamp[y] = round;
                        best[y] = pr;
                        targets.push_back(y);
                    } else if (preference(big, pr) > preference(big, best[y])) {
                        best[y] = pr;
                    }
                    continue;
                }
                std::uint32_t q2 = std::max(q, level_of(g.priority(y)));
                if (stamp[y * L + q2] != round) {
                    stamp[y * L + q2] = round;
                    queue.emplace_back(y, q2);
                }
            }
        }
        std::sort(targets.begin(), targets.end());
        std::vector<std::pair<NodeId, Priority>> r;
        for (auto w : targets) r.emplace_back(w, best[w]);
        routes.emplace_back(v, std::move(r));
    }

    for (auto& [v, r] : routes) {
        std::vector<NodeId> next;
        for (auto [w, pr] : r) next.push_back(transits.get(pr, w, SyntheticKind::Transit));
        std::sort(next.begin(), next.end());
        const std::vector<NodeId> old = g.succ(v);
        for (auto w : old) {
            if (!std::binary_search(next.begin(), next.end(), w)) g.delete_edge(v, w);
        }
        for (auto w : next) {
            if (!std::binary_search(old.begin(), old.end(), w)) g.add_edge(v, w);
        }
    }
}

void
sweep_no_predecessor(WorkGraph& g, std::deque<NodeId> queue, std::optional<Player> only)
{
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        if (!g.alive(v) || !g.pred(v).empty() || (only && g.owner(v) != *only)) continue;
        const std::vector<NodeId> succ = g.succ(v);
        g.remove_no_predecessor(v);
        for (auto w : succ) {
            if (g.alive(w) && g.pred(w).empty()) queue.push_back(w);
        }
    }
}

std::deque<NodeId>
all_alive(const WorkGraph& g)
{
    auto v = g.alive_nodes();
    return std::deque<NodeId>(v.begin(), v.end());
}

void
merge_equal_successors(WorkGraph& g, const TransitTable& transits, Player small)
{
    std::map<std::vector<NodeId>, NodeId> first;
    for (NodeId v = 0; v < g.capacity(); ++v) {
        if (!g.alive(v) || g.owner(v) == small || transits.registered(v)) continue;
        auto [it, fresh] = first.emplace(g.succ(v), v);
        if (!fresh) g.contract(it->second, v);
    }
}

/** Bucket merge of the priority rule: returns old -> new for every changed priority. */
std::vector<std::pair<Priority, Priority>>
compression(const WorkGraph& g)
{
    std::vector<Priority> levels;
    for (auto v : g.alive_nodes()) levels.push_back(g.priority(v));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<std::pair<Priority, Priority>> remap;
    if (levels.empty()) return remap;
    Priority next = levels[0] % 2;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0 && (levels[i] % 2) != (levels[i - 1] % 2)) ++next;
        if (levels[i] != next) remap.emplace_back(levels[i], next);
    }
    return remap;
}

bool
compress(WorkGraph& g)
{
    auto remap = compression(g);
    if (remap.empty()) return false;
    g.remap_priorities(remap);
    return true;
}

std::vector<NodeId>
intersection(const std::vector<NodeId>& a, const std::vector<NodeId>& b)
{
    std::vector<NodeId> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

/** Out-degree rule for u, v on the large side: drop (w,u) for common predecessors w. */
bool
try_outdegree(WorkGraph& g, NodeId u, NodeId v, Player small)
{
    if (!std::includes(g.succ(u).begin(), g.succ(u).end(), g.succ(v).begin(), g.succ(v).end())) return false;
    if (preference(small, g.priority(v)) < preference(small, g.priority(u))) return false;
    auto common = intersection(g.pred(u), g.pred(v));
    for (auto w : common) g.delete_edge(w, u);
    return !common.empty();
}

void
reduce_bipartite(WorkGraph& g, Player small)
{
    const Player big = opponent(small);
    std::deque<NodeId> dirty;
    std::vector<std::uint8_t> queued(g.capacity(), 0);
    auto mark_all = [&]() {
        for (auto v : g.alive_nodes()) {
            if (g.owner(v) == big && !queued[v]) {
                queued[v] = 1;
                dirty.push_back(v);
            }
        }
    };
    auto mark = [&](NodeId v) {
        if (!queued[v]) {
            queued[v] = 1;
            dirty.push_back(v);
        }
    };

    sweep_no_predecessor(g, all_alive(g), std::nullopt);
    mark_all();
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    std::vector<NodeId> cand;
    while (true) {
        if (compress(g)) mark_all();
        if (dirty.empty()) break;
        NodeId x = dirty.front();
        dirty.pop_front();
        queued[x] = 0;
        if (!g.alive(x)) continue;

        cand.clear();
        for (auto w : g.pred(x)) {
            for (auto y : g.succ(w)) {
                if (y != x && !seen[y] && g.owner(y) == big) {
                    seen[y] = 1;
                    cand.push_back(y);
                }
            }
        }
        for (auto y : cand) seen[y] = 0;
        std::sort(cand.begin(), cand.end());
        for (auto y : cand) {
            if (!g.alive(x)) break;
            if (!g.alive(y)) continue;
            if (try_outdegree(g, x, y, small)) sweep_no_predecessor(g, {x}, std::nullopt);
            if (g.alive(x) && g.alive(y) && try_outdegree(g, y, x, small)) sweep_no_predecessor(g, {y}, std::nullopt);
        }
        if (!g.alive(x) || g.succ(x).empty()) continue;

        const std::vector<NodeId> peers = g.pred(g.succ(x)[0]);
        for (auto y : peers) {
            if (y == x || !g.alive(y) || g.owner(y) != big) continue;
            if (g.priority(y) != g.priority(x) || g.succ(y) != g.succ(x)) continue;
            NodeId kept = std::min(x, y), gone = std::max(x, y);
            g.contract(kept, gone);
            mark(kept);
            break;
        }
    }
}

} // namespace

Player
kernel_side(const ParityGame& game, const GeneralKernelOptions& opts)
{
    if (opts.side) return *opts.side;
    if (opts.auto_orient) return smaller_side(game);
    if (game.count_of(Player::Odd) > game.count_of(Player::Even)) throw NotSmallerSide("Odd owns more nodes than Even");
    return Player::Odd;
}

KernelResult
kernelize_general(const ParityGame& game, const GeneralKernelOptions& opts)
{
    const Player small = kernel_side(game, opts);
    KernelResult r;
    WorkGraph g(game, &r.trace);
    TransitTable transits(g, small);
    transits.rebuild();
    split_small_side_edges(g, transits, small);
    remove_closed_cycles(g, small);
    route_through_transits(g, transits, small);
    sweep_no_predecessor(g, all_alive(g), opponent(small));
    merge_equal_successors(g, transits, small);
    r.kernel = g.to_game(&r.trace.kernel_nodes);
    return r;
}

KernelResult
kernelize_bipartite(const ParityGame& game, std::optional<Player> side)
{
    if (!is_bipartite(game)) throw NotBipartite("game has an edge between nodes of one player");
    KernelResult r;
    WorkGraph g(game, &r.trace);
    reduce_bipartite(g, side ? *side : smaller_side(game));
    r.kernel = g.to_game(&r.trace.kernel_nodes);
    return r;
}

KernelResult
kernelize(const ParityGame& game)
{
    return is_bipartite(game) ? kernelize_bipartite(game) : kernelize_general(game);
}

std::optional<RuleApplication>
apply_bipartite_rule_once(const ParityGame& game, BipartiteRule rule)
{
    if (!is_bipartite(game)) throw NotBipartite("game has an edge between nodes of one player");
    const Player small = smaller_side(game);
    const Player big = opponent(small);
    WorkGraph g(game);
    bool applied = false;
    switch (rule) {
    case BipartiteRule::Priority: applied = compress(g); break;
    case BipartiteRule::InDegree:
        for (NodeId v = 0; v < game.n() && !applied; ++v) {
            if (game.in_degree(v) == 0) {
                g.remove_no_predecessor(v);
                applied = true;
            }
        }
        break;
    case BipartiteRule::OutDegree:
        for (NodeId u = 0; u < game.n() && !applied; ++u) {
            for (NodeId v = 0; v < game.n() && !applied; ++v) {
                if (u != v && game.owner(u) == big && game.owner(v) == big) applied = try_outdegree(g, u, v, small);
            }
        }
        break;
    case BipartiteRule::Equal:
        for (NodeId u = 0; u < game.n() && !applied; ++u) {
            for (NodeId v = u + 1; v < game.n() && !applied; ++v) {
                if (game.owner(u) == big && game.owner(v) == big && game.priority(u) == game.priority(v) &&
                    g.succ(u) == g.succ(v)) {
                    g.contract(u, v);
                    applied = true;
                }
            }
        }
        break;
    }
    if (!applied) return std::nullopt;
    RuleApplication r;
    r.game = g.to_game(&r.to_original);
    return r;
}

namespace {

long double
power(long double base, std::size_t e)
{
    return std::pow(base, static_cast<long double>(e));
}

std::string
fmt(long double x)
{
    if (x > 1e18L) return "inf";
    return std::to_string(static_cast<unsigned long long>(x));
}

} // namespace

KernelBound
check_general_bound(const ParityGame& original, const ParityGame& kernel)
{
    const auto s = stats(original);
    const long double p = static_cast<long double>(s.priority_count);
    const std::size_t k = s.k;
    const Player big = opponent(s.owner_of_k);
    const long double total = power(p + 1, k) + (p + 1) * static_cast<long double>(k);
    const long double side = std::min(static_cast<long double>(s.n) + p * static_cast<long double>(k),
                                      power(p + 1, k) + p * static_cast<long double>(k));
    const std::size_t big_count = kernel.count_of(big);
    KernelBound b;
    b.ok = static_cast<long double>(kernel.n()) <= total && static_cast<long double>(big_count) <= side;
    b.detail = "nodes " + std::to_string(kernel.n()) + " <= (p+1)^k+(p+1)k = " + fmt(total) + ", large side " +
               std::to_string(big_count) + " <= " + fmt(side);
    return b;
}

KernelBound
check_bipartite_bound(const ParityGame& original, const ParityGame& kernel)
{
    const auto s = stats(original);
    const long double k = static_cast<long double>(s.k);
    const long double mn = static_cast<long double>(std::min(s.k, s.priority_count));
    const long double nodes = k + power(2, s.k) * mn;
    const long double edges = k * power(2, s.k) * mn;
    KernelBound b;
    b.ok = static_cast<long double>(kernel.n()) <= nodes && static_cast<long double>(kernel.m()) <= edges;
    b.detail = "nodes " + std::to_string(kernel.n()) + " <= k+2^k*min{k,p} = " + fmt(nodes) + ", edges " +
               std::to_string(kernel.m()) + " <= k*2^k*min{k,p} = " + fmt(edges);
    return b;
}

} // namespace pg
