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
#ifndef PGFPT_GENERATE_HPP
#define PGFPT_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "pgfpt/game.hpp"

namespace pg {

struct Family
{
    enum class Kind { General, Bipartite, BoundedOutdegree, Unbalanced };

    Kind kind = Kind::General;
    /** j for BoundedOutdegree, k for Unbalanced; unused otherwise. */
    std::size_t param = 0;

    static Family general() { return {Kind::General, 0}; }
    static Family bipartite() { return {Kind::Bipartite, 0}; }
    static Family bounded_outdegree(std::size_t j) { return {Kind::BoundedOutdegree, j}; }
    static Family unbalanced(std::size_t k) { return {Kind::Unbalanced, k}; }

    /** "general", "bipartite", "bounded(3)", "unbalanced(2)". */
    std::string name() const;
    /** Inverse of name(); also accepts "bounded:3" and "unbalanced:2". */
    static Family parse(const std::string& text);
};

/**
 * Seeded random game from the given family with priorities in
 * [0, priority_bound). Every node first receives one random successor, then
 * extra edges; the result is always well-formed. Unbalanced(k) gives exactly
 * k Odd nodes; Bipartite needs n >= 2.
 */
ParityGame generate(const Family& family, std::size_t n, Priority priority_bound, std::uint64_t seed);

} // namespace pg

#endif
