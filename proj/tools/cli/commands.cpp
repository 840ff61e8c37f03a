// Copyright 2026 The entcap Authors
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

#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/fixtures.hpp"
#include "cli/io.hpp"
#include "entcap/errors.hpp"

namespace entcap::cli {

namespace {

Provenance provenance_for(const std::string &sha, std::optional<std::uint64_t> seed) {
    return Provenance{sha, tool_version(), seed};
}

// Flat key,value listing of a JSON object for --format csv.
void flatten(const json &j, const std::string &prefix, std::string &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); i++) {
            flatten(j[i], prefix + "." + std::to_string(i), out);
        }
    } else if (j.is_number_float()) {
        out += prefix + "," + plain_decimal(j.get<double>()) + "\n";
    } else {
        out += prefix + "," + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

std::string render(const json &doc, const std::string &format) {
    if (format == "csv") {
        std::string out = "key,value\n";
        flatten(doc, "", out);
        return out;
    }
    return dump(doc);
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonHermitianInput:
        return kInvalidHamiltonian;
    case ErrorCode::StepTooLarge:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OutOfDomain:
        return kInvalidProtocol;
    case ErrorCode::ZeroCoupling:
        return kZeroCoupling;
    default:
        return kParseError;
    }
}

}  // namespace

std::string cmd_analyze(const AnalyzeOptions &opts) {
    HamiltonianInput in = read_hamiltonian_file(opts.input);
    AnalysisReport report;
    report.provenance = provenance_for(in.sha256, opts.seed);
    report.capability = analyze_capability(in.hamiltonian);
    report.ancilla = analyze_ancilla(canonical_form(in.hamiltonian));
    return render(to_json(report), opts.format);
}

std::string cmd_protocol(const ProtocolOptions &opts) {
    HamiltonianInput in = read_hamiltonian_file(opts.input);
    const CanonicalForm cf = canonical_form(in.hamiltonian);
    ProtocolConfig cfg;
    cfg.dt = opts.dt;
    cfg.mode = opts.mode == "ancilla" ? ProtocolMode::Ancilla : ProtocolMode::TwoQubit;
    if (cfg.mode == ProtocolMode::Ancilla) {
        cfg.initial_p = opts.initial_p.value_or(optimal_p_tilde());
        const double htm = h_tilde_max(cf);
        // lambda_1 reaches 1/4 (four equal weights) at this time.
        double x0 = std::asin(std::sqrt(std::clamp(cfg.initial_p, 0.0, 1.0)));
        cfg.t_end = htm > 0 ? std::sqrt(3.0) * std::max(0.0, x0 - std::numbers::pi / 6) / htm + 2 * cfg.dt : 1.0;
    } else {
        cfg.initial_p = opts.initial_p.value_or(0.0);
        const double hm = h_max(cf);
        double phi0 = std::asin(std::sqrt(std::clamp(cfg.initial_p, 0.0, 0.5)));
        cfg.t_end = hm > 0 ? (std::numbers::pi / 4 - phi0) / hm + 2 * cfg.dt : 1.0;
    }
    if (opts.t_end) {
        cfg.t_end = *opts.t_end;
    }
    ProtocolTrace trace = run_protocol(in.hamiltonian, cfg);
    if (opts.format == "json") {
        return dump(trace_to_json(trace, provenance_for(in.sha256, std::nullopt)));
    }
    return trace_to_csv(trace);
}

std::string cmd_simulate(const SimulateOptions &opts) {
    HamiltonianInput source = read_hamiltonian_file(opts.source);
    HamiltonianInput target = read_hamiltonian_file(opts.target);
    const CanonicalForm src_cf = canonical_form(source.hamiltonian);
    const CanonicalForm tgt_cf = canonical_form(target.hamiltonian);
    const double dt = opts.dt.value_or(default_dt(src_cf, tgt_cf));
    if (!(opts.t >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "--t must be nonnegative");
    }

    SimulationSchedule schedule = build_schedule(src_cf, target.hamiltonian, opts.t, dt);
    ComplexMatrix u = execute_schedule(schedule, source.hamiltonian);
    double error = simulation_error(u, target.hamiltonian.matrix(), opts.t);

    if (opts.dump_schedule) {
        std::ofstream f(*opts.dump_schedule, std::ios::binary);
        if (!f) {
            throw ParseError("cannot write " + opts.dump_schedule->string());
        }
        f << dump(schedule_to_json(schedule));
    }

    json doc;
    doc["provenance"] = json{{"source_sha256", source.sha256},
                             {"target_sha256", target.sha256},
                             {"tool_version", tool_version()},
                             {"seed", nullptr}};
    doc["t"] = number(opts.t);
    doc["dt"] = number(dt);
    doc["steps"] = schedule.steps.size();
    doc["native_time"] = number(schedule.native_time);
    doc["alpha"] = number(schedule.alpha);
    doc["time_bound"] = number(schedule.time_bound);
    doc["bound_satisfied"] = schedule.native_time <= schedule.time_bound + 1e-12 * std::max(1.0, schedule.time_bound);
    doc["simulation_error"] = number(error);
    return render(doc, opts.format);
}

std::string cmd_verify(const VerifyOptions &opts, bool &passed) {
    HamiltonianInput in = read_hamiltonian_file(opts.input);
    SearchConfig cfg;
    cfg.seed = opts.seed;
    cfg.restarts = opts.restarts;
    std::vector<VerifyRow> rows = verify_rows(in.hamiltonian, cfg, opts.corrupt_analytic);
    passed = std::all_of(rows.begin(), rows.end(), [](const VerifyRow &r) { return r.pass(); });
    if (opts.format == "json") {
        json table = json::array();
        for (const auto &r : rows) {
            table.push_back(json{{"quantity", r.quantity},
                                 {"analytic", number(r.analytic)},
                                 {"oracle", number(r.oracle)},
                                 {"residual", number(r.residual)},
                                 {"tolerance", number(r.tolerance)},
                                 {"pass", r.pass()}});
        }
        json doc{{"provenance", json{{"input_sha256", in.sha256}, {"tool_version", tool_version()}, {"seed", opts.seed}}},
                 {"rows", std::move(table)},
                 {"pass", passed}};
        return dump(doc);
    }
    return verify_table_csv(rows);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entangling capability of two-qubit Hamiltonians", "entcap"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());
    std::optional<std::string> out_path;

    AnalyzeOptions analyze;
    auto *a = app.add_subcommand("analyze", "Capability and ancilla report for a Hamiltonian");
    a->add_option("input", analyze.input, "Hamiltonian JSON file")->required();
    a->add_option("--out", out_path, "Write output to file");
    a->add_option("--seed", analyze.seed, "Recorded in provenance");
    a->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "csv"}));

    ProtocolOptions protocol;
    auto *p = app.add_subcommand("protocol", "Optimal entangling protocol trace");
    p->add_option("input", protocol.input, "Hamiltonian JSON file")->required();
    p->add_option("--dt", protocol.dt, "Time step");
    p->add_option("--t-end", protocol.t_end, "End time (default: until maximal entanglement)");
    p->add_option("--initial-p", protocol.initial_p, "Initial Schmidt weight");
    p->add_option("--mode", protocol.mode)->check(CLI::IsMember({"two-qubit", "ancilla"}));
    p->add_option("--out", out_path, "Write output to file");
    p->add_option("--format", protocol.format)->check(CLI::IsMember({"json", "csv"}));

    SimulateOptions simulate;
    auto *s = app.add_subcommand("simulate", "Simulate a target Hamiltonian with a source Hamiltonian");
    s->add_option("source", simulate.source, "Source Hamiltonian JSON file")->required();
    s->add_option("target", simulate.target, "Target Hamiltonian JSON file")->required();
    s->add_option("--t", simulate.t, "Target evolution time");
    s->add_option("--dt", simulate.dt, "Trotter step (default: 1% of the faster time scale)");
    s->add_option("--dump-schedule", simulate.dump_schedule, "Write the pulse schedule as JSON");
    s->add_option("--out", out_path, "Write output to file");
    s->add_option("--format", simulate.format)->check(CLI::IsMember({"json", "csv"}));

    VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Compare analytic optima with brute-force searches");
    v->add_option("input", verify.input, "Hamiltonian JSON file")->required();
    v->add_option("--seed", verify.seed, "Search seed");
    v->add_option("--restarts", verify.restarts, "Random restarts per search")->check(CLI::PositiveNumber);
    v->add_option("--out", out_path, "Write output to file");
    v->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));
    // Test hook: shifts the analytic h_max so the comparison must fail.
    v->add_option("--corrupt-analytic", verify.corrupt_analytic)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    std::string text;
    int code = kOk;
    try {
        if (*a) {
            text = cmd_analyze(analyze);
        } else if (*p) {
            text = cmd_protocol(protocol);
        } else if (*s) {
            text = cmd_simulate(simulate);
        } else if (*v) {
            bool passed = true;
            text = cmd_verify(verify, passed);
            code = passed ? kOk : kVerifyFailed;
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << *out_path << '\n';
            return kParseError;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace entcap::cli
