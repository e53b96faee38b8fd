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
#ifndef PGFPT_KERNEL_HPP
#define PGFPT_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgfpt/game.hpp"
#include "pgfpt/trace.hpp"

namespace pg {

struct KernelResult
{
    ParityGame kernel;
    ReductionTrace trace;
};

struct GeneralKernelOptions
{
    /**
     * Treat whichever player owns fewer nodes (Odd on ties) as the small side.
     * When false the small side must be Odd, else NotSmallerSide is thrown.
     */
    bool auto_orient = true;
    /** Explicit small side; overrides auto_orient. Re-kernelizing a kernel with its own side is a no-op. */
    std::optional<Player> side;
};

/** The small side kernelize_general uses for game under opts. */
Player kernel_side(const ParityGame& game, const GeneralKernelOptions& opts = {});

/**
 * Kernel for arbitrary games: edges inside the small side are split, closed
 * cycles on the large side are resolved as dominions, every large-side node
 * is rewired through one transit node per reachable small-side target, and
 * predecessor-less large-side nodes are dropped while nodes with equal
 * successor sets are merged.
 */
KernelResult kernelize_general(const ParityGame& game, const GeneralKernelOptions& opts = {});

/**
 * Exhaustive application of the priority, in-degree, out-degree and equality
 * rules to a bipartite game, with side (default: the smaller one) as the
 * small side. Throws NotBipartite.
 */
KernelResult kernelize_bipartite(const ParityGame& game, std::optional<Player> side = std::nullopt);

/** kernelize_bipartite for bipartite games, kernelize_general otherwise. */
KernelResult kernelize(const ParityGame& game);

enum class BipartiteRule { Priority, InDegree, OutDegree, Equal };

struct RuleApplication
{
    ParityGame game;
    /** Node of the reduced game -> node of the input. */
    std::vector<NodeId> to_original;
};

/** The first applicable instance of one rule, or nullopt. Throws NotBipartite. */
std::optional<RuleApplication> apply_bipartite_rule_once(const ParityGame& game, BipartiteRule rule);

struct KernelBound
{
    bool ok = true;
    std::string detail;
};

/** (p+1)^k + (p+1)k total nodes and the large-side bound, with k, p taken from the original. */
KernelBound check_general_bound(const ParityGame& original, const ParityGame& kernel);

/** k + 2^k min{k,p} nodes and k 2^k min{k,p} edges. */
KernelBound check_bipartite_bound(const ParityGame& original, const ParityGame& kernel);

} // namespace pg

#endif
