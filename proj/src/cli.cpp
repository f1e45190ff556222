/*
 * Copyright 2026 The envy-census Authors
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

#include "envy/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "envy/census.hpp"
#include "envy/combinatorics.hpp"
#include "envy/error.hpp"
#include "envy/io.hpp"
#include "envy/seed.hpp"

namespace envy::cli {

namespace {

// Thrown by subcommand handlers for argument problems CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt parse_big(const std::string& text, const char* what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    }
    return BigInt{text};
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    int lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("--m-range must look like a..b, got '" + text + "'");
    }
    if (lo < 1 || hi > kMaxItems || lo > hi) {
        throw UsageError("--m-range needs 1 <= a <= b <= " + std::to_string(kMaxItems) + ", got '" + text + "'");
    }
    return {lo, hi};
}

// Writes to `path`, or to `out` when path is "-".
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int m = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> values;
    std::vector<std::string> values2;
    std::string out = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    if (a.m < 1 || a.m > kMaxItems) throw UsageError("--m must be in [1, 24]");
    InstanceFile file;
    if (a.kind == "tight-ef1") {
        auto v = std::vector<Value>(a.m, Value::from_integer(1));
        if (a.m % 2 == 1) v.back() = Value{};
        file = InstanceFile::additive(v, v);
    } else if (a.kind == "tight-efx") {
        auto v = std::vector<Value>(a.m, Value::from_integer(1));
        v.back() = Value::from_integer(a.m);
        file = InstanceFile::additive(v, v);
    } else if (a.kind == "additive") {
        if (a.values.empty()) throw UsageError("additive instances need --values");
        auto parse_all = [&](const std::vector<std::string>& raw) {
            std::vector<Value> out_values;
            for (const auto& s : raw) {
                try {
                    out_values.push_back(Value::parse(s));
                } catch (const InvalidInput& e) {
                    throw UsageError(e.what());
                }
            }
            if (static_cast<int>(out_values.size()) != a.m) {
                throw UsageError("expected " + std::to_string(a.m) + " values, got " +
                                 std::to_string(out_values.size()));
            }
            return out_values;
        };
        const auto first = parse_all(a.values);
        file = InstanceFile::additive(first, a.values2.empty() ? first : parse_all(a.values2));
    } else {
        file = InstanceFile::tables(random_monotone_instance(a.m, a.seed));
    }
    file.build();  // the written file must load
    emit(a.out, out, to_json(file).dump() + "\n");
    return kOk;
}

struct CountArgs {
    std::string path;
    std::string fairness = "both";
    unsigned jobs = 1;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    Instance inst = [&] {
        if (a.path == "-") return read_instance(std::cin);
        return load_instance(a.path);
    }();
    const bool ef1 = a.fairness != "efx";
    const bool efx = a.fairness != "ef1";
    const CensusReport report = run_census(inst, ef1, efx, CountOptions{a.jobs});
    out << to_json(report).dump() << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string m_range;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string out = "-";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const auto [lo, hi] = parse_range(a.m_range);
    if (a.trials < 1) throw UsageError("--trials must be at least 1");

    struct Task {
        int m;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int m = lo; m <= hi; ++m) {
        for (std::uint64_t t = 0; t < a.trials; ++t) tasks.push_back({m, row_seed(a.seed, m, t)});
    }
    std::vector<ExperimentRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = run_row(tasks[i].m, tasks[i].seed);
    };
    {
        const unsigned n = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(tasks.size())));
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
        worker();
    }

    std::ostringstream csv;
    csv << csv_header() << "\n";
    std::size_t failures = 0;
    for (const auto& row : rows) {
        csv << to_csv(row) << "\n";
        if (!row.ok()) {
            ++failures;
            err << "counterexample: m=" << row.m << " seed=" << row.seed << " ef1_ok=" << row.ef1_ok
                << " efx_ok=" << row.efx_ok << " separation_ok=" << row.separation_ok << "\n";
        }
    }
    emit(a.out, out, csv.str());
    err << "verify: " << rows.size() << " rows, " << failures << " failures\n";
    return failures == 0 ? kOk : kTheoremFailure;
}

struct HarperArgs {
    int m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
};

int cmd_harper(const HarperArgs& a, std::ostream& out) {
    if (a.m < 1 || a.m > kMaxItems) throw UsageError("--m must be in [1, 24]");
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    nlohmann::json failures = nlohmann::json::array();
    for (std::uint64_t t = 0; t < a.trials; ++t) {
        const std::uint64_t seed = derive_seed(a.seed, {static_cast<std::uint64_t>(a.m), t});
        const auto [sys_a, sys_b] = random_system_pair(a.m, seed);
        const HarperReport r = verify_harper(sys_a, sys_b);
        if (!r.ok) {
            auto j = to_json(r);
            j["trial"] = t;
            j["seed"] = std::to_string(seed);
            failures.push_back(std::move(j));
        }
    }
    const nlohmann::json summary = {{"m", a.m},
                                    {"trials", a.trials},
                                    {"seed", std::to_string(a.seed)},
                                    {"failed", failures.size()},
                                    {"ok", failures.empty()},
                                    {"failures", failures}};
    out << summary.dump() << "\n";
    return failures.empty() ? kOk : kTheoremFailure;
}

} // namespace

std::string csv_header() {
    return "m,seed,ef1_count,efx_count,bound,ef1_ok,efx_ok,separation_ok,elapsed_ms";
}

std::string to_csv(const ExperimentRow& r) {
    auto b = [](bool x) { return x ? "true" : "false"; };
    std::ostringstream s;
    s << r.m << ',' << r.seed << ',' << r.ef1_count << ',' << r.efx_count << ',' << r.bound << ','
      << b(r.ef1_ok) << ',' << b(r.efx_ok) << ',' << b(r.separation_ok) << ',' << format_ms(r.elapsed_ms);
    return s.str();
}

std::uint64_t row_seed(std::uint64_t master, int m, std::uint64_t trial) {
    return derive_seed(master, {static_cast<std::uint64_t>(m), trial});
}

ExperimentRow run_row(int m, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const CensusReport report = run_census(random_monotone_instance(m, seed), true, true);
    ExperimentRow row;
    row.m = m;
    row.seed = seed;
    row.ef1_count = *report.ef1_count;
    row.efx_count = *report.efx_count;
    row.bound = report.bound.str();
    row.ef1_ok = BigInt{row.ef1_count} >= report.bound;
    row.efx_ok = row.efx_count >= 2;
    row.separation_ok = report.separation_ok();
    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::pair<SetSystem, SetSystem> random_system_pair(int m, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed));
    const std::uint32_t n = std::uint32_t{1} << m;
    auto draw = [&] {
        // Density in (0, 1] so both sparse and dense systems show up.
        const std::uint64_t density = rng() % 1000 + 1;
        std::vector<Bundle> members;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (rng() % 1000 < density) members.emplace_back(s);
        }
        if (members.empty()) members.emplace_back(static_cast<std::uint32_t>(rng() % n));
        return SetSystem{m, std::move(members)};
    };
    SetSystem a = draw();
    SetSystem b = draw();
    return {std::move(a), std::move(b)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count and construct EF1/EFX allocations for two agents", "envy-census"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write an instance file");
    gen_cmd->add_option("kind", gen.kind, "tight-ef1 | tight-efx | additive | random-monotone")
        ->required()
        ->check(CLI::IsMember({"tight-ef1", "tight-efx", "additive", "random-monotone"}));
    gen_cmd->add_option("--m", gen.m, "Item count")->required();
    gen_cmd->add_option("--seed", gen.seed, "Seed for random-monotone");
    gen_cmd->add_option("--values", gen.values, "Item values for additive (both agents)");
    gen_cmd->add_option("--values2", gen.values2, "Item values for agent 2, if different");
    gen_cmd->add_option("--out,-o", gen.out, "Output path, - for stdout");

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Count EF1/EFX allocations of an instance");
    count_cmd->add_option("instance", count.path, "Instance JSON path, - for stdin")->required();
    count_cmd->add_option("--fairness", count.fairness, "ef1 | efx | both")
        ->check(CLI::IsMember({"ef1", "efx", "both"}));
    count_cmd->add_option("--jobs,-j", count.jobs, "Worker threads")->envname("ENVY_CENSUS_JOBS");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check both lower bounds on random monotone instances");
    verify_cmd->add_option("--m-range", verify.m_range, "Item counts a..b")->required();
    verify_cmd->add_option("--trials", verify.trials, "Instances per item count")->required();
    verify_cmd->add_option("--seed", verify.seed, "Master seed");
    verify_cmd->add_option("--jobs,-j", verify.jobs, "Worker threads")->envname("ENVY_CENSUS_JOBS");
    verify_cmd->add_option("--out,-o", verify.out, "CSV output path, - for stdout");

    std::string shadow_n, cascade_n;
    int shadow_k = 0, cascade_k = 0;
    auto* shadow_cmd = app.add_subcommand("shadow", "Print the shadow bound of n at level k");
    shadow_cmd->add_option("--n", shadow_n)->required();
    shadow_cmd->add_option("--k", shadow_k)->required()->check(CLI::PositiveNumber);
    auto* cascade_cmd = app.add_subcommand("cascade", "Print the k-binomial decomposition of n");
    cascade_cmd->add_option("--n", cascade_n)->required();
    cascade_cmd->add_option("--k", cascade_k)->required()->check(CLI::PositiveNumber);

    HarperArgs harper;
    auto* harper_cmd = app.add_subcommand("harper", "Check the Hamming-ball replacement on random system pairs");
    harper_cmd->add_option("--m", harper.m)->required();
    harper_cmd->add_option("--trials", harper.trials)->required();
    harper_cmd->add_option("--seed", harper.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, out);
        if (count_cmd->parsed()) return cmd_count(count, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
        if (shadow_cmd->parsed()) {
            out << shadow(parse_big(shadow_n, "--n"), shadow_k).str() << "\n";
            return kOk;
        }
        if (cascade_cmd->parsed()) {
            const BigInt n = parse_big(cascade_n, "--n");
            if (n < 1) throw UsageError("--n must be positive");
            out << cascade_decompose(n, cascade_k).to_string() << "\n";
            return kOk;
        }
        if (harper_cmd->parsed()) return cmd_harper(harper, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const InvalidBundle& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    }
    return kUsage;
}

} // namespace envy::cli
