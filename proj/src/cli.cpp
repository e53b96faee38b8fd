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
#include "pgfpt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pgfpt/errors.hpp"
#include "pgfpt/fpt.hpp"
#include "pgfpt/generate.hpp"
#include "pgfpt/kernel.hpp"
#include "pgfpt/oracle.hpp"
#include "pgfpt/pgsolver.hpp"

namespace pg::cli {

namespace {

std::uint64_t
mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string
join_ids(const NodeSet& s)
{
    std::string out;
    for (auto v : s) out += " " + std::to_string(v);
    return out;
}

std::vector<std::string>
split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

struct Failure
{
    int code;
    std::string message;
};

ParityGame
load_valid(const std::string& path)
{
    ParityGame g;
    try {
        g = load_pgsolver(path);
    } catch (const ParseError& e) {
        throw Failure{kParseFailure, path + ": " + e.what()};
    } catch (const std::ios_base::failure& e) {
        throw Failure{kParseFailure, path + ": cannot read file"};
    }
    auto report = validate(g);
    if (!report.ok()) throw Failure{kInvalidGame, path + ": " + report.violations.front()};
    return g;
}

void
write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure{kUsage, "cannot write " + path};
    f << text;
}

std::string
read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{kParseFailure, "cannot read " + path};
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct SolveArgs
{
    std::string input;
    std::string algo = "zielonka";
    std::size_t j = 0;
    bool no_kernel = false;
    bool emit_strategy = false;
    std::uint64_t budget = 1'000'000;
};

int
cmd_solve(const SolveArgs& a, std::ostream& out)
{
    auto algo = parse_algorithm(a.algo);
    if (!algo) throw Failure{kUsage, "unknown algorithm " + a.algo};
    if (a.emit_strategy && (*algo == Algorithm::FptK || *algo == Algorithm::FptDegree)) {
        throw Failure{kUsage, "--emit-strategy needs --algo zielonka or brute"};
    }
    ParityGame g = load_valid(a.input);
    FptConfig cfg;
    cfg.kernelize = !a.no_kernel;
    cfg.brute_budget = a.budget;
    if (a.j > 0) cfg.sub_j = a.j;
    SolveResult r;
    try {
        r = solve(g, *algo, cfg);
    } catch (const BudgetExceeded& e) {
        throw Failure{kBudgetExceeded, e.what()};
    }
    out << format_result(r, a.emit_strategy);
    return kOk;
}

struct KernelArgs
{
    std::string input;
    std::string mode = "auto";
    std::string out;
    std::string trace_out;
};

int
cmd_kernelize(const KernelArgs& a, std::ostream& out)
{
    ParityGame g = load_valid(a.input);
    bool bip = false;
    if (a.mode == "bipartite") {
        if (!is_bipartite(g)) throw Failure{kInvalidGame, a.input + ": game is not bipartite"};
        bip = true;
    } else if (a.mode == "auto") {
        bip = is_bipartite(g);
    } else if (a.mode != "general") {
        throw Failure{kUsage, "unknown mode " + a.mode};
    }
    KernelResult kr = bip ? kernelize_bipartite(g) : kernelize_general(g);
    KernelBound b = bip ? check_bipartite_bound(g, kr.kernel) : check_general_bound(g, kr.kernel);
    if (!a.out.empty()) write_file(a.out, to_pgsolver(kr.kernel));
    if (!a.trace_out.empty()) write_file(a.trace_out, kr.trace.to_text());
    out << "nodes: " << g.n() << " -> " << kr.kernel.n() << "\n";
    out << "edges: " << g.m() << " -> " << kr.kernel.m() << "\n";
    out << "bound (" << (bip ? "bipartite" : "general") << "): " << b.detail << " " << (b.ok ? "PASS" : "FAIL")
        << "\n";
    return kOk;
}

struct GenArgs
{
    std::string family = "general";
    std::size_t n = 10;
    Priority priorities = 4;
    std::size_t k = 2;
    std::size_t j = 3;
    std::uint64_t seed = 1;
    std::string out;
};

std::string
stats_line(const ParityGame& g)
{
    auto s = stats(g);
    std::ostringstream line;
    line << "n=" << s.n << " m=" << s.m << " k=" << s.k << " p=" << s.priority_count
         << " bipartite=" << (is_bipartite(g) ? "yes" : "no");
    return line.str();
}

Family
family_of(const std::string& name, std::size_t k, std::size_t j)
{
    if (name == "unbalanced") return Family::unbalanced(k);
    if (name == "bounded") return Family::bounded_outdegree(j);
    try {
        return Family::parse(name);
    } catch (const std::exception& e) {
        throw Failure{kUsage, e.what()};
    }
}

int
cmd_gen(const GenArgs& a, std::ostream& out)
{
    ParityGame g;
    try {
        g = generate(family_of(a.family, a.k, a.j), a.n, a.priorities, a.seed);
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    }
    if (a.out.empty()) {
        write_pgsolver(out, g);
    } else {
        write_file(a.out, to_pgsolver(g));
    }
    out << stats_line(g) << "\n";
    return kOk;
}

int
cmd_verify(const std::string& game_path, const std::string& result_path, std::ostream& out)
{
    ParityGame g = load_valid(game_path);
    SolveResult r;
    try {
        r = parse_result(read_file(result_path), g.n());
    } catch (const ParseError& e) {
        throw Failure{kParseFailure, result_path + ": " + e.what()};
    }
    std::optional<std::string> bad;
    try {
        bad = partition_violation(g, r);
    } catch (const MissingStrategies& e) {
        bad = e.what();
    }
    if (bad) throw Failure{kVerificationFailed, *bad};
    out << "ok\n";
    return kOk;
}

struct BenchArgs
{
    std::string families = "general";
    std::string sizes = "8";
    std::string k_values = "2";
    std::string algos = "zielonka,fpt-k,fpt-degree,brute";
    std::size_t seeds = 1;
    Priority priorities = 4;
    double timeout = 10;
    std::string csv;
};

std::vector<std::size_t>
numbers(const std::string& text)
{
    std::vector<std::size_t> out;
    for (auto& t : split(text, ',')) {
        try {
            out.push_back(std::stoull(t));
        } catch (const std::exception&) {
            throw Failure{kUsage, "not a number: " + t};
        }
    }
    return out;
}

int
cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err)
{
    std::vector<Algorithm> algos;
    for (auto& t : split(a.algos, ',')) {
        auto x = parse_algorithm(t);
        if (!x) throw Failure{kUsage, "unknown algorithm " + t};
        algos.push_back(*x);
    }
    std::ostringstream csv;
    csv << "instance,family,n,m,k,p,j,algo,ns,depth,dominion_hits,hash\n";
    bool agree = true;
    const auto budget = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(a.timeout));
    for (auto& fam_name : split(a.families, ',')) {
        const bool per_k = fam_name == "unbalanced";
        const auto ks = per_k ? numbers(a.k_values) : std::vector<std::size_t>{0};
        for (auto n : numbers(a.sizes)) {
            for (auto k : ks) {
                const Family fam = per_k ? Family::unbalanced(k) : family_of(fam_name, 0, 3);
                for (std::uint64_t seed = 1; seed <= a.seeds; ++seed) {
                    ParityGame g;
                    try {
                        g = generate(fam, n, a.priorities, seed);
                    } catch (const std::invalid_argument& e) {
                        throw Failure{kUsage, e.what()};
                    }
                    const auto st = stats(g);
                    const std::size_t j = n >= 2 ? choose_j(g).j : 2;
                    const std::string id = fam.name() + "/n" + std::to_string(n) + "/s" + std::to_string(seed);
                    std::optional<std::uint64_t> first;
                    for (auto algo : algos) {
                        Deadline deadline(budget);
                        FptConfig cfg;
                        cfg.deadline = &deadline;
                        cfg.sub_j = j;
                        cfg.brute_budget = UINT64_MAX - 1;
                        FptStats fs;
                        std::string hash;
                        const auto t0 = std::chrono::steady_clock::now();
                        try {
                            auto r = solve(g, algo, cfg, &fs);
                            const auto h = result_hash(r);
                            char buf[17];
                            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
                            hash = buf;
                            if (!first) first = h;
                            if (*first != h) {
                                agree = false;
                                err << "disagreement on " << id << " (" << to_string(algo) << ")\n";
                            }
                        } catch (const TimedOut&) {
                            hash = "timeout";
                        } catch (const BudgetExceeded&) {
                            hash = "budget";
                        }
                        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count();
                        csv << id << ',' << fam.name() << ',' << st.n << ',' << st.m << ',' << st.k << ','
                            << st.priority_count << ',' << j << ',' << to_string(algo) << ',' << ns << ','
                            << fs.depth << ',' << fs.dominion_hits << ',' << hash << '\n';
                    }
                }
            }
        }
    }
    if (a.csv.empty()) {
        out << csv.str();
    } else {
        write_file(a.csv, csv.str());
    }
    return agree ? kOk : kDisagreement;
}

} // namespace

std::string
format_result(const SolveResult& r, bool strategies)
{
    std::string out = "W0:" + join_ids(r.w0) + "\nW1:" + join_ids(r.w1) + "\n";
    if (!strategies) return out;
    for (Player p : {Player::Even, Player::Odd}) {
        out += p == Player::Even ? "S0:" : "S1:";
        if (const auto& s = r.strategy(p)) {
            for (NodeId v = 0; v < s->choice.size(); ++v) {
                if (s->defined(v)) out += " " + std::to_string(v) + "->" + std::to_string((*s)[v]);
            }
        }
        out += "\n";
    }
    return out;
}

SolveResult
parse_result(std::string_view text, std::size_t n)
{
    SolveResult r(n);
    bool seen_w[2] = {false, false};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    auto id = [&](const std::string& tok) -> NodeId {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty()) throw ParseError(no, "bad node id '" + tok + "'");
        if (v >= n) throw ParseError(no, "node " + tok + " out of range");
        return static_cast<NodeId>(v);
    };
    while (std::getline(in, line)) {
        ++no;
        if (line.empty()) continue;
        if (line.size() < 3 || (line[0] != 'W' && line[0] != 'S') || (line[1] != '0' && line[1] != '1') ||
            line[2] != ':') {
            throw ParseError(no, "expected W0:, W1:, S0: or S1:");
        }
        const Player p = line[1] == '0' ? Player::Even : Player::Odd;
        std::istringstream toks(line.substr(3));
        std::string tok;
        if (line[0] == 'W') {
            seen_w[index_of(p)] = true;
            while (toks >> tok) r.won(p).insert(id(tok));
            continue;
        }
        if (!r.strategy(p)) r.strategy(p) = Strategy(p, n);
        while (toks >> tok) {
            auto arrow = tok.find("->");
            if (arrow == std::string::npos) throw ParseError(no, "expected v->w, got '" + tok + "'");
            r.strategy(p)->set(id(tok.substr(0, arrow)), id(tok.substr(arrow + 2)));
        }
    }
    if (!seen_w[0] || !seen_w[1]) throw ParseError(no, "missing W0: or W1: line");
    return r;
}

std::uint64_t
result_hash(const SolveResult& r)
{
    std::uint64_t h = mix(r.w0.universe());
    for (auto v : r.w0) h += mix(2ULL * v);
    for (auto v : r.w1) h += mix(2ULL * v + 1);
    return h;
}

int
run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity game solvers parameterized by the smaller player side and by out-degree", "pgfpt"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a PGSolver game");
    solve_cmd->add_option("input", sa.input, "Game file")->required();
    solve_cmd->add_option("--algo", sa.algo, "zielonka | fpt-k | fpt-degree | brute");
    solve_cmd->add_option("--j", sa.j, "Degree threshold for fpt-degree (default: chosen)");
    solve_cmd->add_flag("--no-kernel", sa.no_kernel, "Skip kernelization in fpt-k");
    solve_cmd->add_flag("--emit-strategy", sa.emit_strategy, "Print S0/S1 lines (zielonka, brute)");
    solve_cmd->add_option("--budget", sa.budget, "Strategy budget for brute force");

    KernelArgs ka;
    auto* kernel_cmd = app.add_subcommand("kernelize", "Reduce a game to its kernel");
    kernel_cmd->add_option("input", ka.input, "Game file")->required();
    kernel_cmd->add_option("--mode", ka.mode, "general | bipartite | auto");
    kernel_cmd->add_option("--out", ka.out, "Kernel output file");
    kernel_cmd->add_option("--trace-out", ka.trace_out, "Reduction trace output file");

    GenArgs ga;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random game");
    gen_cmd->add_option("--family", ga.family, "general | bipartite | unbalanced | bounded");
    gen_cmd->add_option("--n", ga.n, "Number of nodes");
    gen_cmd->add_option("--priorities", ga.priorities, "Priorities are drawn from [0, p)");
    gen_cmd->add_option("--k", ga.k, "Odd nodes for unbalanced");
    gen_cmd->add_option("--j", ga.j, "Out-degree bound for bounded");
    gen_cmd->add_option("--seed", ga.seed, "Seed");
    gen_cmd->add_option("--out", ga.out, "Output file (default: stdout)");

    std::string vgame, vresult;
    auto* verify_cmd = app.add_subcommand("verify", "Check a solve report with strategies");
    verify_cmd->add_option("game", vgame, "Game file")->required();
    verify_cmd->add_option("result", vresult, "Output of solve --emit-strategy")->required();

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark solvers on generated games");
    bench_cmd->add_option("--families", ba.families, "Comma separated families");
    bench_cmd->add_option("--sizes", ba.sizes, "Comma separated node counts");
    bench_cmd->add_option("--k-values", ba.k_values, "Comma separated k for unbalanced");
    bench_cmd->add_option("--algos", ba.algos, "Comma separated algorithms");
    bench_cmd->add_option("--seeds", ba.seeds, "Seeds 1..N per configuration");
    bench_cmd->add_option("--priorities", ba.priorities, "Priorities are drawn from [0, p)");
    bench_cmd->add_option("--timeout", ba.timeout, "Seconds per solver run");
    bench_cmd->add_option("--csv", ba.csv, "CSV output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(sa, out);
        if (*kernel_cmd) return cmd_kernelize(ka, out);
        if (*gen_cmd) return cmd_gen(ga, out);
        if (*verify_cmd) return cmd_verify(vgame, vresult, out);
        if (*bench_cmd) return cmd_bench(ba, out, err);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    }
    return kUsage;
}

} // namespace pg::cli
