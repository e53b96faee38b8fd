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
#include "pgfpt/oracle.hpp"

#include <algorithm>
#include <deque>

#include "pgfpt/attractor.hpp"
#include "pgfpt/errors.hpp"

namespace pg {

namespace detail {

namespace {

constexpr std::uint32_t kNone = 0xffffffffU;

/** Region-local copy of the one-player graph. */
struct Local
{
    std::vector<NodeId> glob;
    std::vector<std::uint32_t> off, adj, roff, radj;
    std::vector<Priority> prio;
    std::vector<std::uint8_t> mover;

    std::size_t size() const { return glob.size(); }
};

Local
build_local(const ParityGame& game, Player mover, const NodeSet& region, const std::vector<NodeId>* fixed)
{
    Local L;
    std::vector<std::uint32_t> loc(game.n(), kNone);
    for (auto v : region) {
        loc[v] = static_cast<std::uint32_t>(L.glob.size());
        L.glob.push_back(v);
    }
    const std::size_t r = L.glob.size();
    L.off.assign(r + 1, 0);
    L.prio.resize(r);
    L.mover.resize(r);
    std::vector<std::uint32_t> indeg(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        NodeId v = L.glob[i];
        L.prio[i] = game.priority(v);
        L.mover[i] = game.owner(v) == mover;
        if (!L.mover[i] && fixed && (*fixed)[v] != kNoNode) {
            NodeId w = (*fixed)[v];
            if (loc[w] != kNone) L.adj.push_back(loc[w]);
        } else {
            for (auto w : game.succ(v)) {
                if (loc[w] != kNone) L.adj.push_back(loc[w]);
            }
            if (!L.mover[i] && L.adj.size() - L.off[i] > 1) {
                throw PreconditionViolated("node " + std::to_string(v) + " of the non-moving player has several successors");
            }
        }
        L.off[i + 1] = static_cast<std::uint32_t>(L.adj.size());
        for (auto k = L.off[i]; k < L.off[i + 1]; ++k) ++indeg[L.adj[k]];
    }
    L.roff.assign(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i) L.roff[i + 1] = L.roff[i] + indeg[i];
    L.radj.resize(L.adj.size());
    std::vector<std::uint32_t> fill(L.roff.begin(), L.roff.end() - 1);
    for (std::uint32_t i = 0; i < r; ++i) {
        for (auto k = L.off[i]; k < L.off[i + 1]; ++k) L.radj[fill[L.adj[k]]++] = i;
    }
    return L;
}

} // namespace

SolitaryOutcome
solitary(const ParityGame& game, Player mover, const NodeSet& region, const std::vector<NodeId>* fixed)
{
    Local L = build_local(game, mover, region, fixed);
    const std::size_t r = L.size();
    SolitaryOutcome out{NodeSet(game.n()), Strategy(mover, game.n())};

    std::vector<Priority> levels;
    for (auto p : L.prio) {
        if (parity_of(p) == mover) levels.push_back(p);
    }
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<std::uint8_t> visited(r, 0);
    std::vector<std::uint32_t> choice(r, kNone);

    std::vector<std::uint32_t> index(r), low(r), comp(r);
    std::vector<std::uint8_t> on_stack(r);
    std::vector<std::uint32_t> stack, members, marked;
    std::vector<std::uint8_t> in_bfs(r, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> calls;
    std::deque<std::uint32_t> queue;

    for (Priority d : levels) {
        std::fill(index.begin(), index.end(), kNone);
        std::fill(comp.begin(), comp.end(), kNone);
        std::fill(on_stack.begin(), on_stack.end(), 0);
        std::uint32_t counter = 0, comp_count = 0;
        for (std::uint32_t s = 0; s < r; ++s) {
            if (L.prio[s] > d || index[s] != kNone) continue;
            calls.emplace_back(s, L.off[s]);
            index[s] = low[s] = counter++;
            stack.push_back(s);
            on_stack[s] = 1;
            while (!calls.empty()) {
                auto& [v, pos] = calls.back();
                if (pos < L.off[v + 1]) {
                    std::uint32_t w = L.adj[pos++];
                    if (L.prio[w] > d) continue;
                    if (index[w] == kNone) {
                        index[w] = low[w] = counter++;
                        stack.push_back(w);
                        on_stack[w] = 1;
                        calls.emplace_back(w, L.off[w]);
                    } else if (on_stack[w]) {
                        low[v] = std::min(low[v], index[w]);
                    }
                    continue;
                }
                std::uint32_t done = v;
                calls.pop_back();
                if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
                if (low[done] != index[done]) continue;

                members.clear();
                std::uint32_t x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = 0;
                    comp[x] = comp_count;
                    members.push_back(x);
                } while (x != done);
                const std::uint32_t cid = comp_count++;

                std::uint32_t g = kNone;
                for (auto y : members) {
                    if (L.prio[y] == d && (g == kNone || y < g)) g = y;
                }
                if (g == kNone || visited[g]) continue;
                bool cyclic = members.size() > 1;
                if (!cyclic) {
                    for (auto k = L.off[g]; k < L.off[g + 1]; ++k) cyclic |= L.adj[k] == g;
                }
                if (!cyclic) continue;

                visited[g] = 1;
                if (L.mover[g]) {
                    for (auto k = L.off[g]; k < L.off[g + 1]; ++k) {
                        if (comp[L.adj[k]] == cid) {
                            choice[g] = L.adj[k];
                            break;
                        }
                    }
                }
                // members of this component now lead back to g
                queue.assign(1, g);
                marked.assign(1, g);
                in_bfs[g] = 1;
                while (!queue.empty()) {
                    std::uint32_t y = queue.front();
                    queue.pop_front();
                    for (auto k = L.roff[y]; k < L.roff[y + 1]; ++k) {
                        std::uint32_t u = L.radj[k];
                        if (comp[u] != cid || in_bfs[u]) continue;
                        in_bfs[u] = 1;
                        marked.push_back(u);
                        if (!visited[u]) {
                            visited[u] = 1;
                            if (L.mover[u]) choice[u] = y;
                        }
                        queue.push_back(u);
                    }
                }
                for (auto u : marked) in_bfs[u] = 0;
            }
        }
    }

    queue.clear();
    for (std::uint32_t i = 0; i < r; ++i) {
        if (visited[i]) queue.push_back(i);
    }
    while (!queue.empty()) {
        std::uint32_t y = queue.front();
        queue.pop_front();
        for (auto k = L.roff[y]; k < L.roff[y + 1]; ++k) {
            std::uint32_t u = L.radj[k];
            if (visited[u]) continue;
            visited[u] = 1;
            if (L.mover[u]) choice[u] = y;
            queue.push_back(u);
        }
    }

    for (std::uint32_t i = 0; i < r; ++i) {
        if (!visited[i]) continue;
        out.win.insert(L.glob[i]);
        if (L.mover[i]) out.strategy.set(L.glob[i], L.glob[choice[i]]);
    }
    return out;
}

} // namespace detail

SolveResult
solve_solitary(const ParityGame& game, Player mover)
{
    const Player opp = opponent(mover);
    for (NodeId v = 0; v < game.n(); ++v) {
        if (game.owner(v) == opp && game.out_degree(v) != 1) {
            throw PreconditionViolated("node " + std::to_string(v) + " of the non-moving player has out-degree " +
                                       std::to_string(game.out_degree(v)));
        }
    }
    auto sol = detail::solitary(game, mover, game.nodes(), nullptr);
    SolveResult r(game.n());
    r.won(mover) = sol.win;
    r.won(opp) = game.nodes() - sol.win;
    Strategy forced(opp, game.n());
    Strategy& ms = sol.strategy;
    for (NodeId v = 0; v < game.n(); ++v) {
        if (game.owner(v) == opp) {
            if (r.won(opp).contains(v)) forced.set(v, game.succ(v)[0]);
        } else if (!sol.win.contains(v)) {
            ms.clear(v);
        }
    }
    r.strategy(mover) = std::move(ms);
    r.strategy(opp) = std::move(forced);
    return r;
}

std::uint64_t
strategy_count(const ParityGame& game, Player p, std::uint64_t cap)
{
    std::uint64_t total = 1;
    for (NodeId v = 0; v < game.n(); ++v) {
        if (game.owner(v) != p) continue;
        std::uint64_t d = game.out_degree(v);
        if (d == 0) continue;
        if (total > (cap + 1) / d) return cap + 1;
        total *= d;
        if (total > cap) return cap + 1;
    }
    return total;
}

namespace {

struct Enumeration
{
    /** Nodes from which the non-enumerated player wins against every strategy. */
    NodeSet opp_win;
    /** A strategy of the enumerated player that wins everywhere else. */
    std::vector<NodeId> best;
};

Enumeration
enumerate(const ParityGame& game, Player P, Deadline* deadline)
{
    const std::size_t n = game.n();
    const Player Q = opponent(P);
    std::vector<NodeId> mine;
    for (NodeId v = 0; v < n; ++v) {
        if (game.owner(v) == P) mine.push_back(v);
    }
    std::vector<std::size_t> digit(mine.size(), 0);
    std::vector<NodeId> sigma(n, kNoNode);
    for (auto v : mine) sigma[v] = game.succ(v)[0];

    Enumeration e{game.nodes(), sigma};
    std::size_t best_size = n + 1;
    const NodeSet all = game.nodes();
    while (true) {
        poll(deadline);
        auto sol = detail::solitary(game, Q, all, &sigma);
        e.opp_win &= sol.win;
        std::size_t sz = sol.win.size();
        if (sz < best_size) {
            best_size = sz;
            e.best = sigma;
        }
        std::size_t i = 0;
        for (; i < mine.size(); ++i) {
            auto s = game.succ(mine[i]);
            if (++digit[i] < s.size()) {
                sigma[mine[i]] = s[digit[i]];
                break;
            }
            digit[i] = 0;
            sigma[mine[i]] = s[0];
        }
        if (i == mine.size()) break;
    }
    return e;
}

} // namespace

SolveResult
solve_brute(const ParityGame& game, const BruteOptions& opts)
{
    const std::size_t n = game.n();
    Player P;
    if (opts.enumerate) {
        P = *opts.enumerate;
    } else {
        auto c0 = strategy_count(game, Player::Even, opts.budget);
        auto c1 = strategy_count(game, Player::Odd, opts.budget);
        P = c0 < c1 ? Player::Even : Player::Odd;
    }
    if (strategy_count(game, P, opts.budget) > opts.budget) {
        throw BudgetExceeded("more than " + std::to_string(opts.budget) + " strategies to enumerate");
    }
    const Player Q = opponent(P);
    SolveResult r(n);
    if (n == 0) {
        if (opts.strategies) {
            r.strategy0 = Strategy(Player::Even, 0);
            r.strategy1 = Strategy(Player::Odd, 0);
        }
        return r;
    }
    Enumeration e = enumerate(game, P, opts.deadline);
    r.won(Q) = e.opp_win;
    r.won(P) = game.nodes() - e.opp_win;
    if (!opts.strategies) return r;

    Strategy sp(P, n);
    for (auto v : r.won(P)) {
        if (game.owner(v) == P) sp.set(v, e.best[v]);
    }

    // Q's uniform strategy on its winning set: halve each choice list while Q still wins everywhere.
    const NodeSet& W = r.won(Q);
    auto lists = game.successor_lists();
    for (auto& l : lists) l.clear();
    for (auto v : W) {
        for (auto w : game.succ(v)) {
            if (W.contains(w)) lists[v].push_back(w);
        }
    }
    auto q_wins_all = [&](const std::vector<std::vector<NodeId>>& ls) {
        std::vector<std::vector<NodeId>> sub;
        std::vector<Player> owners;
        std::vector<Priority> prios;
        std::vector<NodeId> loc(n, kNoNode);
        NodeId c = 0;
        for (auto v : W) loc[v] = c++;
        for (auto v : W) {
            owners.push_back(game.owner(v));
            prios.push_back(game.priority(v));
            sub.emplace_back();
            for (auto w : ls[v]) sub.back().push_back(loc[w]);
        }
        ParityGame h(std::move(owners), std::move(prios), sub);
        return enumerate(h, P, opts.deadline).opp_win.size() == h.n();
    };
    Strategy sq(Q, n);
    for (auto v : W) {
        if (game.owner(v) != Q) continue;
        auto& l = lists[v];
        while (l.size() > 1) {
            std::vector<NodeId> full = l;
            std::size_t half = l.size() / 2;
            l.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(half));
            if (!q_wins_all(lists)) l.assign(full.begin() + static_cast<std::ptrdiff_t>(half), full.end());
        }
        sq.set(v, l[0]);
    }
    r.strategy(P) = std::move(sp);
    r.strategy(Q) = std::move(sq);
    return r;
}

bool
verify_strategy(const ParityGame& game, const NodeSet& set, const Strategy& strat)
{
    const Player X = strat.owner;
    for (auto v : set) {
        if (game.owner(v) == X) {
            if (!strat.defined(v)) throw PreconditionViolated("strategy undefined at node " + std::to_string(v));
            NodeId w = strat[v];
            if (!game.has_edge(v, w)) {
                throw PreconditionViolated("strategy uses missing edge " + std::to_string(v) + "->" + std::to_string(w));
            }
            if (!set.contains(w)) throw PreconditionViolated("strategy leaves the set at node " + std::to_string(v));
        } else {
            for (auto w : game.succ(v)) {
                if (!set.contains(w)) throw PreconditionViolated("opponent escapes the set at node " + std::to_string(v));
            }
        }
    }
    if (set.empty()) return true;
    std::vector<NodeId> fixed(game.n(), kNoNode);
    for (auto v : set) {
        if (game.owner(v) == X) fixed[v] = strat[v];
    }
    auto sol = detail::solitary(game, opponent(X), set, &fixed);
    return sol.win.empty();
}

std::optional<std::string>
partition_violation(const ParityGame& game, const SolveResult& result)
{
    if (!result.strategy0 || !result.strategy1) throw MissingStrategies("result lacks a strategy");
    if (!is_partition(game, result)) return "winning sets do not partition the nodes";
    for (int i = 0; i < 2; ++i) {
        Player p = player_of(i);
        NodeId v = first_escape(game, result.won(p), p);
        if (v != kNoNode) return "closedness violated at node " + std::to_string(v);
    }
    for (int i = 0; i < 2; ++i) {
        Player p = player_of(i);
        const NodeSet& W = result.won(p);
        const Strategy& s = *result.strategy(p);
        const std::string tag = "strategy not winning on W" + std::to_string(i);
        for (auto v : W) {
            if (game.owner(v) != p) continue;
            if (!s.defined(v)) return "strategy for player " + std::to_string(i) + " undefined at node " + std::to_string(v);
            if (!game.has_edge(v, s[v]) || !W.contains(s[v])) return tag;
        }
        Strategy own = s;
        own.owner = p;
        if (!verify_strategy(game, W, own)) return tag;
    }
    return std::nullopt;
}

bool
verify_partition(const ParityGame& game, const SolveResult& result)
{
    return !partition_violation(game, result).has_value();
}

} // namespace pg
