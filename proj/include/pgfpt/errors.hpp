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

#ifndef PGFPT_ERRORS_HPP
#define PGFPT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pg {

/** A caller broke an operation's documented precondition. */
class PreconditionViolated : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/** An internal consistency check (progress measure, parameter formula) failed. */
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/** The brute-force oracle would have to enumerate more strategies than allowed. */
class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** A cooperative deadline passed before the solver finished. */
class TimedOut : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidFamilyParams : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class NotSmallerSide : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class NotBipartite : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class TraceMismatch : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class MissingStrategies : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/** Malformed input text; line() is 1-based. */
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) { }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace pg

#endif
