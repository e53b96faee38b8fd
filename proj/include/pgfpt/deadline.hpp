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
#ifndef PGFPT_DEADLINE_HPP
#define PGFPT_DEADLINE_HPP

#include <chrono>
#include <cstdint>

#include "pgfpt/errors.hpp"

namespace pg {

/** Cooperative wall-clock limit; long loops call poll(), which throws TimedOut. */
class Deadline
{
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(std::chrono::nanoseconds budget) : at_(clock::now() + budget), armed_(true) { }

    bool armed() const noexcept { return armed_; }
    bool expired() const { return armed_ && clock::now() >= at_; }

    void poll()
    {
        if (armed_ && (++ticks_ & 0x3ff) == 0 && clock::now() >= at_) throw TimedOut("deadline reached");
    }

private:
    clock::time_point at_{};
    bool armed_ = false;
    std::uint64_t ticks_ = 0;
};

/** poll() on a possibly-null deadline. */
inline void poll(Deadline* d)
{
    if (d) d->poll();
}

} // namespace pg

#endif
