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
#include "pgfpt/node_set.hpp"

namespace pg {

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> ids) : NodeSet(universe)
{
    for (auto v : ids) insert(v);
}

NodeSet
NodeSet::full(std::size_t universe)
{
    NodeSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

std::size_t
NodeSet::size() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool
NodeSet::empty() const noexcept
{
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

void
NodeSet::clear() noexcept
{
    for (auto& w : words_) w = 0;
}

NodeSet&
NodeSet::operator|=(const NodeSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

NodeSet&
NodeSet::operator&=(const NodeSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

NodeSet&
NodeSet::operator-=(const NodeSet& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

NodeSet
NodeSet::complement() const
{
    return full(universe_) - *this;
}

bool
NodeSet::is_subset_of(const NodeSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool
NodeSet::intersects(const NodeSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

std::size_t
NodeSet::find_next(std::size_t from) const noexcept
{
    if (from >= universe_) return universe_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w != 0) {
            std::size_t pos = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            return pos < universe_ ? pos : universe_;
        }
        if (++wi >= words_.size()) return universe_;
        w = words_[wi];
    }
}

std::vector<NodeId>
NodeSet::to_vector() const
{
    std::vector<NodeId> out;
    for (auto v : *this) out.push_back(v);
    return out;
}

} // namespace pg
