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

#ifndef PGFPT_NODE_SET_HPP
#define PGFPT_NODE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <vector>

namespace pg {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/**
 * A set of node ids drawn from a fixed universe {0, ..., universe-1}.
 *
 * Stored as a bit vector; iteration always visits ids in ascending order so
 * every algorithm that walks a NodeSet is deterministic.
 */
class NodeSet
{
public:
    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = NodeId;
        using difference_type = std::ptrdiff_t;
        using pointer = const NodeId*;
        using reference = NodeId;

        const_iterator() = default;
        const_iterator(const NodeSet* set, std::size_t pos) : set_(set), pos_(pos) { }

        NodeId operator*() const { return static_cast<NodeId>(pos_); }
        const_iterator& operator++() { pos_ = set_->find_next(pos_ + 1); return *this; }
        const_iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        const NodeSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) { }
    NodeSet(std::size_t universe, std::initializer_list<NodeId> ids);

    static NodeSet full(std::size_t universe);
    template <class Range>
    static NodeSet from_range(std::size_t universe, const Range& ids)
    {
        NodeSet s(universe);
        for (auto v : ids) s.insert(static_cast<NodeId>(v));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(NodeId v) const noexcept
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(NodeId v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() noexcept;

    NodeSet& operator|=(const NodeSet& other);
    NodeSet& operator&=(const NodeSet& other);
    NodeSet& operator-=(const NodeSet& other);
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    NodeSet complement() const;
    bool is_subset_of(const NodeSet& other) const;
    bool intersects(const NodeSet& other) const;

    bool operator==(const NodeSet& other) const = default;

    const_iterator begin() const { return const_iterator(this, find_next(0)); }
    const_iterator end() const { return const_iterator(this, universe_); }

    /** Smallest member >= from, or universe() when there is none. */
    std::size_t find_next(std::size_t from) const noexcept;

    std::vector<NodeId> to_vector() const;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pg

#endif
