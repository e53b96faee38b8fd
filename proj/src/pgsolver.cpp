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
#include "pgfpt/pgsolver.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "pgfpt/errors.hpp"

namespace pg {

namespace {

struct Cursor
{
    std::string_view s;
    std::size_t pos = 0;
    std::size_t line = 1;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n')) {
            if (s[pos] == '\n') ++line;
            ++pos;
        }
    }
    bool at_end()
    {
        skip_ws();
        return pos >= s.size();
    }
    bool starts_with(std::string_view w)
    {
        skip_ws();
        return s.substr(pos, w.size()) == w;
    }
    std::uint64_t number(const char* what)
    {
        skip_ws();
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc() || p == s.data() + pos) throw ParseError(line, std::string("expected ") + what);
        pos = static_cast<std::size_t>(p - s.data());
        return v;
    }
    void expect(char c)
    {
        const std::size_t at = line;
        skip_ws();
        if (pos >= s.size() || s[pos] != c) throw ParseError(at, std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct NodeLine
{
    Priority prio;
    Player owner;
    std::vector<NodeId> succ;
};

} // namespace

ParityGame
parse_pgsolver(std::string_view text)
{
    Cursor c{text};
    std::optional<std::uint64_t> max_id;
    if (c.starts_with("parity")) {
        c.pos += 6;
        max_id = c.number("maximal node id");
        c.expect(';');
    }
    if (c.starts_with("start")) {
        c.pos += 5;
        c.number("start node");
        c.expect(';');
    }
    std::map<std::uint64_t, NodeLine> lines;
    std::uint64_t largest = 0;
    while (!c.at_end()) {
        const std::size_t line = c.line;
        auto id = c.number("node id");
        if (id >= kNoNode) throw ParseError(line, "node id too large");
        if (max_id && id > *max_id) throw ParseError(line, "node id exceeds the header's maximum");
        auto prio = c.number("priority");
        if (prio > 0xffffffffULL) throw ParseError(line, "priority too large");
        auto owner = c.number("owner");
        if (owner > 1) throw ParseError(line, "owner must be 0 or 1");
        NodeLine nl{static_cast<Priority>(prio), owner == 0 ? Player::Even : Player::Odd, {}};
        do {
            auto w = c.number("successor id");
            if (w >= kNoNode) throw ParseError(line, "successor id too large");
            nl.succ.push_back(static_cast<NodeId>(w));
        } while (c.accept(','));
        if (c.accept('"')) {
            while (c.pos < c.s.size() && c.s[c.pos] != '"') {
                if (c.s[c.pos] == '\n') throw ParseError(line, "unterminated name");
                ++c.pos;
            }
            c.expect('"');
        }
        if (!c.accept(';')) throw ParseError(line, "expected ';'");
        if (!lines.emplace(id, std::move(nl)).second) throw ParseError(line, "node declared twice");
        largest = std::max(largest, id);
    }
    const std::size_t n = lines.empty() ? (max_id ? *max_id + 1 : 0) : (max_id ? *max_id : largest) + 1;

    std::vector<Player> owners(n, Player::Even);
    std::vector<Priority> prios(n, 0);
    std::vector<std::vector<NodeId>> out(n), in(n);
    for (auto& [id, nl] : lines) {
        owners[id] = nl.owner;
        prios[id] = nl.prio;
        std::sort(nl.succ.begin(), nl.succ.end());
        nl.succ.erase(std::unique(nl.succ.begin(), nl.succ.end()), nl.succ.end());
        for (auto w : nl.succ) {
            if (w < n) in[w].push_back(static_cast<NodeId>(id));
        }
        out[id] = std::move(nl.succ);
    }
    return ParityGame::from_raw(std::move(owners), std::move(prios), out, in);
}

ParityGame
read_pgsolver(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_pgsolver(text);
}

ParityGame
load_pgsolver(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_pgsolver(f);
}

void
write_pgsolver(std::ostream& out, const ParityGame& game)
{
    if (game.n() == 0) return;
    out << "parity " << game.n() - 1 << ";\n";
    for (NodeId v = 0; v < game.n(); ++v) {
        out << v << ' ' << game.priority(v) << ' ' << index_of(game.owner(v)) << ' ';
        bool first = true;
        for (auto w : game.succ(v)) {
            if (!first) out << ',';
            out << w;
            first = false;
        }
        out << ";\n";
    }
}

std::string
to_pgsolver(const ParityGame& game)
{
    std::ostringstream os;
    write_pgsolver(os, game);
    return os.str();
}

} // namespace pg
