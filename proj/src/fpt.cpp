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
#include "pgfpt/fpt.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "pgfpt/attractor.hpp"
#include "pgfpt/dominion.hpp"
#include "pgfpt/errors.hpp"
#include "pgfpt/kernel.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/zielonka.hpp"

namespace pg {

namespace {

std::uint64_t
floor_sqrt(std::uint64_t x)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/** log_j(s), exact when s is a power of j. */
long double
log_base(std::size_t s, std::size_t j)
{
    std::size_t e = 0;
    std::uint64_t p = 1;
    while (p < s) {
        p *= j;
        ++e;
    }
    if (p == s) return static_cast<long double>(e);
    return std::log(static_cast<long double>(s)) / std::log(static_cast<long double>(j));
}

void
require(bool ok, const std::string& what)
{
    if (!ok) throw InvariantViolation(what);
}

struct Measure
{
    std::size_t k;
    std::size_t pc;
    std::size_t n;

    explicit Measure(const ParityGame& g)
        : k(std::min(g.count_of(Player::Even), g.count_of(Player::Odd))), pc(distinct_priorities(g)), n(g.n())
    {
    }

    auto kp() const { return std::tie(k, pc); }
    auto kpn() const { return std::tie(k, pc, n); }
};

enum class Step { Any, StrictKP };

class Fpt
{
public:
    Fpt(const FptConfig& cfg, FptStats& stats) : cfg_(cfg), stats_(stats) { }

    SolveResult new_win1(const ParityGame& game)
    {
        Frame f(*this);
        if (game.n() == 0) return SolveResult(0);
        KernelResult kr;
        const ParityGame* h = &game;
        if (cfg_.kernelize) {
            kr = kernelize(game);
            h = &kr.kernel;
        }
        SolveResult r = new_win1_body(*h, cfg_.kernelize ? std::optional<Player>(smaller_side(game)) : std::nullopt);
        return cfg_.kernelize ? lift_solution(kr.trace, r) : r;
    }

    SolveResult old_win1(const ParityGame& game, bool searched)
    {
        Frame f(*this);
        if (game.n() == 0) return SolveResult(0);
        KernelResult kr;
        const ParityGame* h = &game;
        if (cfg_.kernelize) {
            kr = kernelize(game);
            h = &kr.kernel;
        }
        const bool strict = searched && cfg_.kernelize && cfg_.dominion_search;
        SolveResult r = zielonka_step(*h, strict ? Step::StrictKP : Step::Any,
                                      [this](const ParityGame& g) { return new_win1(g); });
        return cfg_.kernelize ? lift_solution(kr.trace, r) : r;
    }

    SolveResult new_win2(const ParityGame& game, std::size_t j)
    {
        Frame f(*this);
        const std::size_t n = game.n();
        if (n == 0) return SolveResult(0);
        const std::size_t sj = stats(game).s(j);
        if (sj <= cfg_.base_case_degree && n - sj <= cfg_.base_case_degree) return brute(game);
        DegreeBudget budget{high_budget(n, sj), low_budget(sj, j), j};
        check_degree_budgets(n, sj, j, budget);
        if (cfg_.dominion_search) {
            if (auto d = find_dominion_by_degree(game, budget, cfg_.deadline)) {
                return remove_dominion(game, *d, Step::Any, [&](const ParityGame& g) { return new_win2(g, j); });
            }
        }
        return old_win2(game, j);
    }

    SolveResult old_win2(const ParityGame& game, std::size_t j)
    {
        Frame f(*this);
        if (game.n() == 0) return SolveResult(0);
        return zielonka_step(game, Step::Any, [&](const ParityGame& g) { return new_win2(g, j); });
    }

private:
    struct Frame
    {
        Fpt& s;
        explicit Frame(Fpt& solver) : s(solver)
        {
            ++s.stats_.calls;
            if (++s.level_ > s.stats_.depth) s.stats_.depth = s.level_;
            poll(s.cfg_.deadline);
        }
        ~Frame() { --s.level_; }
    };

    SolveResult brute(const ParityGame& game)
    {
        BruteOptions o;
        o.budget = cfg_.brute_budget;
        o.strategies = false;
        o.deadline = cfg_.deadline;
        return solve_brute(game, o);
    }

    SolveResult new_win1_body(const ParityGame& h, std::optional<Player> kernel_side)
    {
        if (h.n() == 0) return SolveResult(0);
        const Measure here(h);
        if (here.k <= cfg_.base_case_k) {
            try {
                return brute(h);
            } catch (const BudgetExceeded&) {
                if (!cfg_.kernelize) throw;
                return old_win1(h, false);
            }
        }
        const std::size_t ell = odd_budget(here.k);
        ++stats_.guard_checks;
        require(ell * ell <= 2 * here.k && 2 * here.k < (ell + 1) * (ell + 1), "ell != floor(sqrt(2k))");
        if (cfg_.dominion_search) {
            OddNodeOptions o;
            o.side = smaller_side(h);
            o.synthesize_witness = false;
            o.deadline = cfg_.deadline;
            auto d = find_dominion_by_odd_nodes(h, ell, [this](const ParityGame& g) { return new_win1(g); }, o);
            if (d) {
                const bool strict = kernel_side && smaller_side(h) == *kernel_side;
                return remove_dominion(h, *d, strict ? Step::StrictKP : Step::Any,
                                       [this](const ParityGame& g) { return new_win1(g); });
            }
        }
        return old_win1(h, cfg_.dominion_search);
    }

    void check_progress(const ParityGame& from, const ParityGame& to, Step step, bool by_nodes)
    {
        const Measure a(from), b(to);
        if (by_nodes) {
            require(b.n < a.n, "recursive call does not shrink the game");
            return;
        }
        require(b.kpn() < a.kpn(), "recursive call does not decrease (k, p, n)");
        if (step == Step::StrictKP) require(b.kp() < a.kp(), "recursive call does not decrease (k, p)");
    }

    template <class Recurse>
    SolveResult remove_dominion(const ParityGame& g, const DominionResult& d, Step step, Recurse recurse)
    {
        ++stats_.dominion_hits;
        const Player i = d.owner;
        const NodeSet removed = attractor(g, d.set, i).set;
        auto sub = subgame(g, removed);
        check_progress(g, sub.game, step, by_nodes_);
        SolveResult inner = recurse(sub.game);
        SolveResult r(g.n());
        for (auto v : inner.won(opponent(i))) r.won(opponent(i)).insert(sub.to_parent[v]);
        r.won(i) = r.won(opponent(i)).complement();
        require(removed.is_subset_of(r.won(i)), "dominion nodes not won by their owner");
        return r;
    }

    template <class Recurse>
    SolveResult zielonka_step(const ParityGame& g, Step step, Recurse recurse)
    {
        const Priority top = g.max_priority();
        const Player i = parity_of(top);
        NodeSet tops(g.n());
        for (NodeId v = 0; v < g.n(); ++v) {
            if (g.priority(v) == top) tops.insert(v);
        }
        const NodeSet a = attractor(g, tops, i).set;
        SolveResult r(g.n());
        if (a.size() == g.n()) {
            r.won(i) = NodeSet::full(g.n());
            return r;
        }
        auto first = subgame(g, a);
        check_progress(g, first.game, Step::Any, by_nodes_);
        if (!by_nodes_) require(distinct_priorities(first.game) < distinct_priorities(g), "top priority survived");
        SolveResult w1 = recurse(first.game);
        if (w1.won(opponent(i)).empty()) {
            r.won(i) = NodeSet::full(g.n());
            return r;
        }
        NodeSet lost(g.n());
        for (auto v : w1.won(opponent(i))) lost.insert(first.to_parent[v]);
        const NodeSet b = attractor(g, lost, opponent(i)).set;
        auto second = subgame(g, b);
        check_progress(g, second.game, step, by_nodes_);
        SolveResult w2 = recurse(second.game);
        for (auto v : w2.won(i)) r.won(i).insert(second.to_parent[v]);
        r.won(opponent(i)) = r.won(i).complement();
        return r;
    }

    void check_degree_budgets(std::size_t n, std::size_t sj, std::size_t j, const DegreeBudget& b)
    {
        ++stats_.guard_checks;
        const std::size_t x = 2 * (n - sj);
        const bool ell_ok = b.ell == 0 ? x == 0 : (b.ell - 1) * (b.ell - 1) < x && x <= b.ell * b.ell;
        require(ell_ok, "ell != ceil(sqrt(2(n - s_j)))");
        std::size_t s = 0;
        if (sj > 1) {
            const double v = static_cast<double>(sj) * std::log2(static_cast<double>(sj)) /
                             std::log2(static_cast<double>(j));
            s = std::min<std::size_t>(sj, static_cast<std::size_t>(std::ceil(std::sqrt(v) - 1e-9)));
        }
        require(b.s == s, "s != ceil(sqrt(s_j log_j s_j))");
    }

    const FptConfig& cfg_;
    FptStats& stats_;
    std::size_t level_ = 0;

public:
    /** Progress is measured by node count on the degree paths. */
    bool by_nodes_ = false;
};

} // namespace

std::size_t
odd_budget(std::size_t k)
{
    return floor_sqrt(2 * static_cast<std::uint64_t>(k));
}

std::size_t
high_budget(std::size_t n, std::size_t s_j)
{
    const std::uint64_t x = 2 * static_cast<std::uint64_t>(n - s_j);
    std::uint64_t r = floor_sqrt(x);
    return r * r < x ? r + 1 : r;
}

std::size_t
low_budget(std::size_t s_j, std::size_t j)
{
    if (s_j <= 1) return 0;
    const long double x = static_cast<long double>(s_j) * log_base(s_j, j);
    auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(x)));
    while (r > 0 && static_cast<long double>(r - 1) * (r - 1) >= x) --r;
    while (static_cast<long double>(r) * r < x) ++r;
    return std::min<std::size_t>(s_j, r);
}

double
degree_score(std::size_t n, std::size_t s_j, std::size_t j)
{
    double score = std::sqrt(static_cast<double>(n - s_j));
    if (s_j > 1) score += std::sqrt(static_cast<double>(s_j) / static_cast<double>(log_base(s_j, j)));
    return score;
}

JChoice
choose_j(const ParityGame& game)
{
    if (game.n() < 2) throw PreconditionViolated("choose_j needs at least two nodes");
    const auto st = stats(game);
    JChoice best{2, degree_score(game.n(), st.s(2), 2)};
    for (std::size_t j = 3; j <= game.n(); ++j) {
        const double f = degree_score(game.n(), st.s(j), j);
        if (f < best.score - 1e-9 * std::max(1.0, best.score)) best = {j, f};
    }
    return best;
}

SolveResult
new_win1(const ParityGame& game, const FptConfig& cfg, FptStats* stats)
{
    FptStats local;
    return Fpt(cfg, stats ? *stats : local).new_win1(game);
}

SolveResult
old_win1(const ParityGame& game, const FptConfig& cfg, FptStats* stats)
{
    FptStats local;
    return Fpt(cfg, stats ? *stats : local).old_win1(game, false);
}

SolveResult
new_win2(const ParityGame& game, std::size_t j, const FptConfig& cfg, FptStats* stats)
{
    if (j < 2) throw PreconditionViolated("degree threshold must be at least 2");
    FptStats local;
    Fpt f(cfg, stats ? *stats : local);
    f.by_nodes_ = true;
    return f.new_win2(game, j);
}

SolveResult
old_win2(const ParityGame& game, std::size_t j, const FptConfig& cfg, FptStats* stats)
{
    if (j < 2) throw PreconditionViolated("degree threshold must be at least 2");
    FptStats local;
    Fpt f(cfg, stats ? *stats : local);
    f.by_nodes_ = true;
    return f.old_win2(game, j);
}

const char*
to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::Zielonka: return "zielonka";
    case Algorithm::FptK: return "fpt-k";
    case Algorithm::FptDegree: return "fpt-degree";
    case Algorithm::Brute: return "brute";
    }
    return "?";
}

std::optional<Algorithm>
parse_algorithm(std::string_view name)
{
    for (auto a : {Algorithm::Zielonka, Algorithm::FptK, Algorithm::FptDegree, Algorithm::Brute}) {
        if (name == to_string(a)) return a;
    }
    return std::nullopt;
}

SolveResult
solve(const ParityGame& game, Algorithm algorithm, const FptConfig& cfg, FptStats* stats)
{
    FptStats local;
    FptStats& st = stats ? *stats : local;
    SolveResult r;
    switch (algorithm) {
    case Algorithm::Zielonka: {
        ZielonkaStats z;
        r = win(game, cfg.deadline, &z);
        st.calls = z.calls;
        st.depth = z.depth;
        break;
    }
    case Algorithm::Brute: {
        BruteOptions o;
        o.budget = cfg.brute_budget;
        o.deadline = cfg.deadline;
        r = solve_brute(game, o);
        st.calls = 1;
        break;
    }
    case Algorithm::FptK: r = new_win1(game, cfg, &st); break;
    case Algorithm::FptDegree: {
        std::size_t j = cfg.sub_j ? *cfg.sub_j : (game.n() >= 2 ? choose_j(game).j : 2);
        r = new_win2(game, j, cfg, &st);
        break;
    }
    }
    require(is_partition(game, r), std::string(to_string(algorithm)) + " result is not a partition");
    return r;
}

} // namespace pg
