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
#ifndef PGFPT_PGSOLVER_HPP
#define PGFPT_PGSOLVER_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "pgfpt/game.hpp"

namespace pg {

/**
 * Reads a game in PGSolver format. The `parity <max-id>;` header and node
 * names are optional; a `start <id>;` line is ignored. Syntax errors raise
 * ParseError with the offending line. Successor ids that name no declared
 * node, and declared-but-missing ids, are kept so validate() can flag them.
 */
ParityGame parse_pgsolver(std::string_view text);
ParityGame read_pgsolver(std::istream& in);
ParityGame load_pgsolver(const std::string& path);

/** Canonical form: header, nodes ascending, successors ascending, no names. */
void write_pgsolver(std::ostream& out, const ParityGame& game);
std::string to_pgsolver(const ParityGame& game);

} // namespace pg

#endif
