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
#ifndef PGFPT_FPT_HPP
#define PGFPT_FPT_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "pgfpt/deadline.hpp"
#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg {

struct FptConfig
{
    /** Brute force once the small side has at most this many nodes. */
    std::size_t base_case_k = 4;
    /** Brute force once both degree classes have at most this many nodes. */
    std::size_t base_case_degree = 3;
    std::uint64_t brute_budget = 1'000'000;
    bool kernelize = true;
    /** Degree threshold for new_win2 in solve(); choose_j when absent. */
    std::optional<std::size_t> sub_j;
    /** Disabling turns new_win1/new_win2 into their old_win counterparts. */
    bool dominion_search = true;
    Deadline* deadline = nullptr;
};

struct FptStats
{
    std::size_t calls = 0;
    std::size_t depth = 0;
    std::size_t dominion_hits = 0;
    /** Parameter formulas recomputed and compared. */
    std::size_t guard_checks = 0;
};

/** Small-dominion search on the kernel, then recursion; exact partition. */
SolveResult new_win1(const ParityGame& game, const FptConfig& cfg = {}, FptStats* stats = nullptr);
/** Zielonka step whose recursive calls go to new_win1. */
SolveResult old_win1(const ParityGame& game, const FptConfig& cfg = {}, FptStats* stats = nullptr);
/** Out-degree parameterized variant with threshold j >= 2. */
SolveResult new_win2(const ParityGame& game, std::size_t j, const FptConfig& cfg = {}, FptStats* stats = nullptr);
SolveResult old_win2(const ParityGame& game, std::size_t j, const FptConfig& cfg = {}, FptStats* stats = nullptr);

struct JChoice
{
    std::size_t j = 2;
    double score = 0;
};

/** sqrt(n - s_j) + sqrt(s_j / log_j s_j), with the second term 0 for s_j <= 1. */
double degree_score(std::size_t n, std::size_t s_j, std::size_t j);
/** argmin of degree_score over j = 2..n, smallest j on ties. Requires n >= 2. */
JChoice choose_j(const ParityGame& game);

/** floor(sqrt(2k)). */
std::size_t odd_budget(std::size_t k);
/** ceil(sqrt(2(n - s_j))). */
std::size_t high_budget(std::size_t n, std::size_t s_j);
/** 0 if s_j <= 1, else min(s_j, ceil(sqrt(s_j log_j s_j))). */
std::size_t low_budget(std::size_t s_j, std::size_t j);

enum class Algorithm { Zielonka, FptK, FptDegree, Brute };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/** Dispatch; the result is checked to partition the nodes. */
SolveResult solve(const ParityGame& game, Algorithm algorithm, const FptConfig& cfg = {},
                  FptStats* stats = nullptr);

} // namespace pg

#endif
