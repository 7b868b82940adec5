// Copyright 2026 The Guesswork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "guesswork/guesswork.hpp"

#ifndef GUESSWORK_VERSION
#define GUESSWORK_VERSION "unknown"
#endif

namespace guesswork::cli {

namespace {

using nlohmann::json;

struct Input {
    QubitCqChannel channel;
    std::optional<Prior> prior;
    CostFunction cost;
    std::string source;
};

Input load_input(const std::string &channel_arg, const std::string &cost_arg) {
    auto family = parse_family(channel_arg);
    ChannelDocument doc = family ? ChannelDocument{generate_hsic(*family), std::nullopt}
                                 : load_channel_document(channel_arg);
    const std::size_t size = doc.channel.size();

    std::vector<double> values;
    if (cost_arg == "identity") {
        values = CostFunction::identity(size).values();
    } else if (cost_arg.rfind("file:", 0) == 0) {
        const std::string path = cost_arg.substr(5);
        std::ifstream in(path);
        if (!in) {
            throw Error(ErrorCode::IoError, "cannot open cost file " + path);
        }
        try {
            values = json::parse(in).get<std::vector<double>>();
        } catch (const json::exception &e) {
            throw Error(ErrorCode::ParseError, std::string("invalid cost file: ") + e.what());
        }
        if (values.size() != size) {
            throw Error(ErrorCode::LengthMismatch, "cost file has " +
                                                       std::to_string(values.size()) +
                                                       " entries for " + std::to_string(size) +
                                                       " labels");
        }
    } else {
        throw Error(ErrorCode::ValidationError, "cost must be 'identity' or 'file:<path>'");
    }
    return {std::move(doc.channel), std::move(doc.prior), CostFunction(std::move(values)),
            channel_arg};
}

// FNV-1a over the canonical channel serialization and the cost values.
std::string input_hash(const Input &in) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::string_view bytes) {
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    feed(serialize_channel(in.channel, in.prior));
    feed(json(in.cost.values()).dump());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json manifest(const Input &in, unsigned threads, std::optional<std::uint64_t> seed) {
    json m;
    m["version"] = GUESSWORK_VERSION;
    m["input_hash"] = input_hash(in);
    m["threads"] = threads;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    return m;
}

json labels_of(const QubitCqChannel &channel, const Numbering &n) {
    json out = json::array();
    for (std::size_t t = 0; t < n.size(); ++t) {
        out.push_back(channel.labels()[n[t]]);
    }
    return out;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const json &v) {
    if (v.is_number_float()) {
        return fmt17(v.get<double>());
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string s;
        for (const auto &e : v) {
            s += (s.empty() ? "" : ";") + csv_field(e);
        }
        return s;
    }
    return v.dump();
}

// One header line and one row; nested objects are flattened as parent.child.
void print_csv(std::ostream &out, const json &result, const std::vector<std::string> &columns) {
    std::string header, row;
    for (const auto &col : columns) {
        const auto dot = col.find('.');
        const json &v = dot == std::string::npos ? result.at(col)
                                                 : result.at(col.substr(0, dot)).at(col.substr(dot + 1));
        header += (header.empty() ? "" : ",") + col;
        row += (row.empty() ? "" : ",") + csv_field(v);
    }
    out << header << '\n' << row << '\n';
}

const std::vector<std::string> kSolveColumns{
    "channel", "regime", "value", "best_norm", "score", "numbering", "leaves_visited",
    "nodes_expanded", "wall_time", "bound_only", "manifest.input_hash", "manifest.version",
    "manifest.threads"};
const std::vector<std::string> kOracleColumns{
    "channel", "regime", "value", "best_norm", "score", "numbering", "leaves",
    "manifest.input_hash", "manifest.version"};
const std::vector<std::string> kSimulateColumns{
    "channel", "shots_per_state", "empirical_guesswork", "standard_error", "closed_form",
    "manifest.input_hash", "manifest.version", "manifest.seed"};

void emit(std::ostream &out, const json &result, const std::string &format,
          const std::vector<std::string> &columns) {
    if (format == "csv") {
        print_csv(out, result, columns);
    } else {
        out << result.dump(2) << '\n';
    }
}

int exit_code_for(const Error &e) {
    return e.code() == ErrorCode::NotBalanced ? kNotBalanced : kValidation;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Adversarial guesswork of qubit classical-quantum channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GUESSWORK_VERSION);

    std::string channel_arg;
    std::string cost_arg = "identity";
    std::string regime_arg = "auto";
    std::string format = "json";
    unsigned threads = 1;
    double time_budget = 0.0;
    std::uint64_t cap = OracleOptions{}.cap;
    std::uint64_t shots = 4000;
    std::uint64_t seed = 1;
    std::string family_arg;
    std::string out_path;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--channel", channel_arg, "HSIC family name or channel JSON path")
            ->required();
        cmd->add_option("--cost", cost_arg, "identity | file:<path to JSON array>");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    };

    auto *solve_cmd = app.add_subcommand("solve", "maximin guesswork by branch and bound");
    add_common(solve_cmd);
    solve_cmd->add_option("--threads", threads);
    solve_cmd->add_option("--regime", regime_arg)
        ->check(CLI::IsMember({"auto", "general", "transitive", "cs", "transitive-cs"}));
    solve_cmd->add_option("--time-budget", time_budget, "seconds; 0 means unlimited");

    auto *oracle_cmd = app.add_subcommand("oracle", "exhaustive reference search");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--regime", regime_arg)
        ->check(CLI::IsMember({"auto", "general", "transitive", "cs", "transitive-cs"}));
    oracle_cmd->add_option("--cap", cap, "refuse enumerations above this many leaves");

    auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo guessing game");
    add_common(sim_cmd);
    sim_cmd->add_option("--shots", shots, "shots per state")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", seed);
    sim_cmd->add_option("--threads", threads);

    auto *channels_cmd = app.add_subcommand("channels", "built-in channel families");
    channels_cmd->require_subcommand(1);
    auto *list_cmd = channels_cmd->add_subcommand("list", "list HSIC families");
    auto *export_cmd = channels_cmd->add_subcommand("export", "write a family as channel JSON");
    export_cmd->add_option("--family", family_arg)->required();
    export_cmd->add_option("--out", out_path, "output path; stdout when omitted");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*list_cmd) {
            json result = json::array();
            for (HsicFamily f : kAllHsicFamilies) {
                result.push_back({{"name", family_name(f)}, {"states", vertex_count(f)}});
            }
            out << result.dump(2) << '\n';
            return kOk;
        }
        if (*export_cmd) {
            auto family = parse_family(family_arg);
            if (!family) {
                throw Error(ErrorCode::UnknownFamily, "unknown family '" + family_arg + "'");
            }
            const auto channel = generate_hsic(*family);
            if (out_path.empty()) {
                out << serialize_channel(channel) << '\n';
            } else {
                save_channel(channel, out_path);
            }
            return kOk;
        }

        const Input in = load_input(channel_arg, cost_arg);
        std::optional<Regime> regime;
        if (regime_arg != "auto") {
            regime = parse_regime(regime_arg);
        }
        const std::string name = in.channel.name().empty() ? in.source : in.channel.name();

        if (*solve_cmd) {
            SolveOptions options;
            options.threads = threads;
            options.force_regime = regime;
            if (time_budget > 0.0) {
                options.time_budget = std::chrono::duration<double>(time_budget);
            }
            const auto r = solve(in.channel, in.cost, options);
            json result;
            result["command"] = "solve";
            result["channel"] = name;
            result["value"] = r.value;
            result["best_norm"] = r.best_norm;
            result["score"] = r.score;
            result["greedy_score"] = r.greedy_score;
            result["numbering"] = labels_of(in.channel, r.best_numbering);
            result["regime"] = regime_name(r.regime);
            result["leaves_visited"] = r.leaves_visited;
            result["nodes_expanded"] = r.nodes_expanded;
            result["wall_time"] = r.wall_time;
            result["bound_only"] = r.bound_only;
            result["manifest"] = manifest(in, threads, std::nullopt);
            emit(out, result, format, kSolveColumns);
            return r.bound_only ? kTimeBudgetExceeded : kOk;
        }

        if (*oracle_cmd) {
            const Regime chosen = regime.value_or(select_regime(detect_symmetries(in.channel)));
            const auto r = brute_force_norm(in.channel, in.cost, chosen, OracleOptions{cap});
            json result;
            result["command"] = "oracle";
            result["channel"] = name;
            result["value"] = r.value;
            result["balanced"] = in.cost.is_balanced();
            result["best_norm"] = r.norm;
            result["score"] = r.score;
            result["numbering"] = labels_of(in.channel, r.numbering);
            result["regime"] = regime_name(chosen);
            result["leaves"] = r.leaves;
            result["manifest"] = manifest(in, 1, std::nullopt);
            emit(out, result, format, kOracleColumns);
            return kOk;
        }

        if (*sim_cmd) {
            SolveOptions options;
            options.threads = threads;
            const auto solved = solve(in.channel, in.cost, options);
            const auto measurement =
                build_optimal_measurement(in.channel, in.cost, solved.best_numbering);
            const Prior prior = in.prior.value_or(Prior::uniform(in.channel.size()));
            const auto report =
                simulate_game(in.channel, prior, in.cost, measurement, shots, seed);
            json result;
            result["command"] = "simulate";
            result["channel"] = name;
            result["shots_per_state"] = report.shots_per_state;
            result["empirical_guesswork"] = report.empirical_guesswork;
            result["standard_error"] = report.standard_error;
            result["per_state_mean_cost"] = report.per_state_mean_cost;
            result["q"] = report.q;
            result["closed_form"] = solved.value;
            result["deviation_in_standard_errors"] =
                report.standard_error > 0.0
                    ? (report.empirical_guesswork - solved.value) / report.standard_error
                    : 0.0;
            result["manifest"] = manifest(in, threads, seed);
            emit(out, result, format, kSimulateColumns);
            return kOk;
        }
    } catch (const Error &e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kUsage;
}

} // namespace guesswork::cli
