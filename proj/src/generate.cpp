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
#include "pgfpt/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pgfpt/errors.hpp"

namespace pg {

std::string
Family::name() const
{
    switch (kind) {
    case Kind::General: return "general";
    case Kind::Bipartite: return "bipartite";
    case Kind::BoundedOutdegree: return "bounded(" + std::to_string(param) + ")";
    case Kind::Unbalanced: return "unbalanced(" + std::to_string(param) + ")";
    }
    return "?";
}

Family
Family::parse(const std::string& text)
{
    auto param_of = [&](std::size_t start) -> std::size_t {
        std::string digits;
        for (std::size_t i = start; i < text.size(); ++i) {
            char ch = text[i];
            if (ch >= '0' && ch <= '9') digits += ch;
            else if (ch != '(' && ch != ')' && ch != ':') throw InvalidFamilyParams("bad family: " + text);
        }
        if (digits.empty()) throw InvalidFamilyParams("family parameter missing: " + text);
        return std::stoul(digits);
    };
    if (text == "general") return general();
    if (text == "bipartite") return bipartite();
    if (text.rfind("bounded", 0) == 0) return bounded_outdegree(param_of(7));
    if (text.rfind("unbalanced", 0) == 0) return unbalanced(param_of(10));
    throw InvalidFamilyParams("unknown family: " + text);
}

namespace {

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) { }

    /** Uniform in [0, bound). */
    std::size_t below(std::size_t bound)
    {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(eng_);
    }
    bool coin() { return below(2) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
    std::mt19937_64 eng_;
};

} // namespace

ParityGame
generate(const Family& family, std::size_t n, Priority priority_bound, std::uint64_t seed)
{
    if (n < 1) throw InvalidFamilyParams("n must be at least 1");
    if (priority_bound < 1) throw InvalidFamilyParams("priority bound must be at least 1");
    Rng rng(seed);
    std::vector<Player> owners(n);
    std::vector<Priority> prios(n);
    std::vector<std::vector<NodeId>> succ(n);

    switch (family.kind) {
    case Family::Kind::General:
    case Family::Kind::BoundedOutdegree: {
        std::size_t j = n;
        if (family.kind == Family::Kind::BoundedOutdegree) {
            if (family.param < 1) throw InvalidFamilyParams("bounded out-degree needs j >= 1");
            j = std::min(family.param, n);
        }
        for (std::size_t v = 0; v < n; ++v) {
            owners[v] = rng.coin() ? Player::Odd : Player::Even;
            prios[v] = static_cast<Priority>(rng.below(priority_bound));
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t draws = family.kind == Family::Kind::General ? 1 + rng.below(3) : 1 + rng.below(j);
            for (std::size_t d = 0; d < draws; ++d) succ[v].push_back(static_cast<NodeId>(rng.below(n)));
        }
        break;
    }
    case Family::Kind::Bipartite: {
        if (n < 2) throw InvalidFamilyParams("bipartite games need n >= 2");
        for (std::size_t v = 0; v < n; ++v) {
            owners[v] = rng.coin() ? Player::Odd : Player::Even;
            prios[v] = static_cast<Priority>(rng.below(priority_bound));
        }
        // both sides must be inhabited
        if (std::all_of(owners.begin(), owners.end(), [&](Player p) { return p == owners[0]; })) {
            owners[rng.below(n)] = opponent(owners[0]);
        }
        std::vector<NodeId> side[2];
        for (std::size_t v = 0; v < n; ++v) side[index_of(owners[v])].push_back(static_cast<NodeId>(v));
        for (std::size_t v = 0; v < n; ++v) {
            const auto& other = side[1 - index_of(owners[v])];
            std::size_t draws = 1 + rng.below(3);
            for (std::size_t d = 0; d < draws; ++d) succ[v].push_back(rng.pick(other));
        }
        break;
    }
    case Family::Kind::Unbalanced: {
        const std::size_t k = family.param;
        if (k > n) throw InvalidFamilyParams("unbalanced(k) needs k <= n");
        std::vector<NodeId> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (std::size_t i = 0; i < k; ++i) std::swap(ids[i], ids[i + rng.below(n - i)]);
        std::fill(owners.begin(), owners.end(), Player::Even);
        for (std::size_t i = 0; i < k; ++i) owners[ids[i]] = Player::Odd;
        for (std::size_t v = 0; v < n; ++v) prios[v] = static_cast<Priority>(rng.below(priority_bound));
        for (std::size_t v = 0; v < n; ++v) {
            succ[v].push_back(static_cast<NodeId>(rng.below(n)));
            if (owners[v] == Player::Odd) {
                for (std::size_t w = 0; w < n; ++w) {
                    if (rng.coin()) succ[v].push_back(static_cast<NodeId>(w));
                }
            } else {
                std::size_t draws = rng.below(3);
                for (std::size_t d = 0; d < draws; ++d) succ[v].push_back(static_cast<NodeId>(rng.below(n)));
            }
        }
        break;
    }
    }
    return ParityGame(std::move(owners), std::move(prios), succ);
}

} // namespace pg
