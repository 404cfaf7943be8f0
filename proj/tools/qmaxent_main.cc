// Copyright 2026 The qmaxent Authors
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

// Command-line front end: reconstruct, expect, entropy-table and verify.
//
// Exit codes: 0 success, 1 usage/schema/numerical error, 2 infeasible means,
// 3 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmaxent/errors.h"
#include "qmaxent/obs_parser.h"
#include "qmaxent/report.h"
#include "qmaxent/solver.h"
#include "qmaxent/states.h"
#include "qmaxent/verify.h"

namespace {

using namespace qmaxent;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;

int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::Infeasible:
        case ErrorCode::NoPhysicalPoint:
        case ErrorCode::NonPhysicalMeans:
        case ErrorCode::BlochNormExceeded:
            return kExitInfeasible;
        default:
            return kExitUsage;
    }
}

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    }
    out << text;
}

struct StateArgs {
    std::string state = "bell";
    std::string family = "psi";
    double phi = 0;
    double theta = 0;
};

int state_spins(const StateArgs &a) {
    if (a.state == "single") {
        return 1;
    }
    return a.state == "bell" ? 2 : 3;
}

DensityMatrix make_state(const StateArgs &a, double phi) {
    if (a.state == "single") {
        return single_spin(a.theta, phi).density();
    }
    if (a.state == "bell") {
        return bell(phi, a.family == "phi_pm" ? BellFamily::PhiPm : BellFamily::Psi).density();
    }
    return ghz(phi).density();
}

// A registry key, or else a level file with one observable per line.
ObservationLevel resolve_level(const std::string &spec, int n) {
    for (const auto &key : registered_level_keys()) {
        if (key == spec) {
            ObservationLevel level = named_level(key);
            if (level.spins() != n) {
                throw Error(ErrorCode::DimensionMismatch, "level " + key + " acts on " +
                                                              std::to_string(level.spins()) + " spins, the state on " +
                                                              std::to_string(n));
            }
            return level;
        }
    }
    if (std::filesystem::is_regular_file(spec)) {
        return ObservationLevel(n, parse_level_text(read_input(spec), n), spec);
    }
    throw Error(ErrorCode::UnknownLevel, "unknown level \"" + spec + "\" (not a registry key or a file)");
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw Error(ErrorCode::InvalidArgument, "bad phi grid component \"" + item + "\"");
        }
    }
    if (parts.size() == 1) {
        return parts;
    }
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
        throw Error(ErrorCode::InvalidArgument, "phi grid must be a value or start:stop:step with step > 0");
    }
    std::vector<double> grid;
    auto count = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] * (1 + 1e-12)));
    for (long k = 0; k <= count; ++k) {
        grid.push_back(parts[0] + static_cast<double>(k) * parts[2]);
    }
    return grid;
}

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmd_reconstruct(const std::string &input, const std::string &output) {
    ReconstructionRequest request = read_request(read_input(input));
    ConstraintSet c = request_constraints(request);
    ReconstructionResult r = reconstruct(c, request.options);
    write_output(output, write_json(report_json(r, c.level())));
    return kExitOk;
}

int cmd_expect(const StateArgs &a, const std::string &level_spec) {
    int n = state_spins(a);
    ObservationLevel level = resolve_level(level_spec, n);
    ConstraintSet c = constraints_from_state(make_state(a, a.phi), level);
    Json source;
    source["state"] = a.state;
    if (a.state == "bell") {
        source["family"] = a.family;
    }
    source["phi"] = a.phi;
    if (a.state == "single") {
        source["theta"] = a.theta;
    }
    std::cout << write_json(request_json(c, source));
    return kExitOk;
}

int cmd_entropy_table(const StateArgs &a, const std::string &levels_text, const std::string &grid_text,
                      const std::string &format) {
    int n = state_spins(a);
    std::vector<std::string> keys = split_commas(levels_text);
    if (keys.empty()) {
        throw Error(ErrorCode::InvalidArgument, "--levels needs at least one level");
    }
    std::vector<ObservationLevel> levels;
    for (const auto &k : keys) {
        levels.push_back(resolve_level(k, n));
    }
    std::vector<double> grid = parse_grid(grid_text);
    std::vector<std::vector<double>> table;
    for (double phi : grid) {
        DensityMatrix rho = make_state(a, phi);
        std::vector<double> row;
        for (const auto &level : levels) {
            row.push_back(reconstruct(constraints_from_state(rho, level)).entropy);
        }
        table.push_back(row);
    }
    if (format == "json") {
        Json doc;
        doc["state"] = a.state;
        doc["units"] = "nats";
        Json lv = Json::array();
        for (const auto &k : keys) {
            lv.push_back(k);
        }
        doc["levels"] = lv;
        Json rows = Json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Json row;
            row["phi"] = grid[i];
            Json entropy;
            for (std::size_t j = 0; j < keys.size(); ++j) {
                entropy[keys[j]] = table[i][j];
            }
            row["entropy"] = entropy;
            rows.push_back(row);
        }
        doc["rows"] = rows;
        std::cout << write_json(doc);
        return kExitOk;
    }
    std::cout << "phi";
    for (const auto &k : keys) {
        std::cout << ',' << k;
    }
    std::cout << '\n';
    char buf[40];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g", grid[i]);
        std::cout << buf;
        for (double s : table[i]) {
            std::snprintf(buf, sizeof buf, "%.10f", std::abs(s) < 5e-11 ? 0.0 : s);
            std::cout << ',' << buf;
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string &suite) {
    std::vector<CheckOutcome> checks = run_verify_suite(suite);
    int failures = 0;
    for (const auto &c : checks) {
        std::cout << format_check(c) << '\n';
        failures += c.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << "  suite " << suite << ": " << checks.size() - failures << "/"
              << checks.size() << " checks passed\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Maximum-entropy reconstruction of few-spin density matrices"};
    app.require_subcommand(1);

    std::string input;
    std::string output = "-";
    auto *reconstruct_cmd = app.add_subcommand("reconstruct", "Reconstruct a state from a JSON request");
    reconstruct_cmd->add_option("input", input, "Request JSON path, or - for stdin")->required();
    reconstruct_cmd->add_option("output", output, "Report JSON path, or - for stdout (default)");

    const std::vector<std::string> states{"bell", "ghz", "single"};
    StateArgs state_args;
    std::string level_spec;
    auto *expect_cmd = app.add_subcommand("expect", "Print a reconstruction request with exact reference means");
    expect_cmd->add_option("--state", state_args.state, "Reference state")->check(CLI::IsMember(states))->required();
    expect_cmd->add_option("--family", state_args.family, "Bell family: psi or phi_pm")
        ->check(CLI::IsMember({"psi", "phi_pm"}));
    expect_cmd->add_option("--phi", state_args.phi, "Relative phase (radians)");
    expect_cmd->add_option("--theta", state_args.theta, "Single-spin polar parameter (radians)");
    expect_cmd->add_option("--level", level_spec, "Registry key or level file")->required();

    StateArgs table_args;
    std::string levels_text;
    std::string grid_text = "0";
    std::string format = "csv";
    auto *table_cmd = app.add_subcommand("entropy-table", "Reconstruction entropy per level over a phase grid");
    table_cmd->add_option("--state", table_args.state, "Reference state")->check(CLI::IsMember(states))->required();
    table_cmd->add_option("--family", table_args.family, "Bell family: psi or phi_pm")
        ->check(CLI::IsMember({"psi", "phi_pm"}));
    table_cmd->add_option("--theta", table_args.theta, "Single-spin polar parameter (radians)");
    table_cmd->add_option("--levels", levels_text, "Comma-separated registry keys or level files")->required();
    table_cmd->add_option("--phi-grid", grid_text, "phi or start:stop:step (inclusive)");
    table_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string suite;
    auto *verify_cmd = app.add_subcommand("verify", "Run a reproduction suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify_suite_names()))->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*reconstruct_cmd) {
            return cmd_reconstruct(input, output);
        }
        if (*expect_cmd) {
            return cmd_expect(state_args, level_spec);
        }
        if (*table_cmd) {
            return cmd_entropy_table(table_args, levels_text, grid_text, format);
        }
        return cmd_verify(suite);
    } catch (const Error &e) {
        std::cerr << "qmaxent: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "qmaxent: internal error: " << e.what() << '\n';
        return kExitUsage;
    }
}
