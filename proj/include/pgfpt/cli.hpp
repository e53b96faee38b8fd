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
#ifndef PGFPT_CLI_HPP
#define PGFPT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pgfpt/game.hpp"
#include "pgfpt/strategy.hpp"

namespace pg::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kInvalidGame = 3,
    kBudgetExceeded = 4,
    kVerificationFailed = 5,
    kDisagreement = 6,
};

/** The solve report: W0/W1 lines, plus S0/S1 lines when strategies are present. */
std::string format_result(const SolveResult& r, bool strategies);

/** Inverse of format_result for a game with n nodes. Throws ParseError. */
SolveResult parse_result(std::string_view text, std::size_t n);

/** Order-independent digest of the node -> winner map. */
std::uint64_t result_hash(const SolveResult& r);

/** Entry point of the pgfpt tool. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pg::cli

#endif
