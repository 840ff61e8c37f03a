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

#include "cli/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <openssl/evp.h>

#include "entcap/errors.hpp"

#ifndef ENTCAP_VERSION
#define ENTCAP_VERSION "unknown"
#endif

namespace entcap::cli {

namespace {

RealVector3 real3(const json &j, const char *what) {
    if (!j.is_array() || j.size() != 3) {
        throw ParseError(std::string(what) + " must be an array of 3 numbers");
    }
    RealVector3 v;
    for (int i = 0; i < 3; i++) {
        if (!j[i].is_number()) {
            throw ParseError(std::string(what) + " must contain numbers");
        }
        v(i) = j[i].get<double>();
    }
    return v;
}

ComplexMatrix parse_matrix(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("matrix must be a 4x4 array of [re, im] pairs");
    }
    ComplexMatrix m(4, 4);
    for (int r = 0; r < 4; r++) {
        const json &row = j[r];
        if (!row.is_array() || row.size() != 4) {
            throw ParseError("matrix row " + std::to_string(r) + " must have 4 entries");
        }
        for (int c = 0; c < 4; c++) {
            const json &e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                 ") must be [re, im]");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

PauliCoefficients parse_pauli(const json &j) {
    if (!j.is_object()) {
        throw ParseError("pauli must be an object with alpha, beta, gamma");
    }
    PauliCoefficients c;
    if (j.contains("alpha")) {
        c.alpha = real3(j["alpha"], "pauli.alpha");
    }
    if (j.contains("beta")) {
        c.beta = real3(j["beta"], "pauli.beta");
    }
    if (!j.contains("gamma")) {
        throw ParseError("pauli.gamma is required");
    }
    const json &g = j["gamma"];
    if (!g.is_array() || g.size() != 3) {
        throw ParseError("pauli.gamma must be a 3x3 array");
    }
    for (int r = 0; r < 3; r++) {
        c.gamma.row(r) = real3(g[r], "pauli.gamma row").transpose();
    }
    return c;
}

json vec3(const RealVector3 &v) {
    return json::array({number(v(0)), number(v(1)), number(v(2))});
}

RealVector3 vec3_from(const json &j) {
    return RealVector3(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>());
}

std::optional<double> optional_number(const json &j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<double>();
}

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (int c = 0; c < m.cols(); c++) {
            row.push_back(json::array({number(m(r, c).real()), number(m(r, c).imag())}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from(const json &j, int dim) {
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            const json &e = j.at(r).at(c);
            m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

json local_pair_json(const LocalPair &p) {
    return json{{"a", matrix_json(p.a)}, {"b", matrix_json(p.b)}};
}

LocalPair local_pair_from(const json &j) {
    return LocalPair{matrix_from(j.at("a"), 2), matrix_from(j.at("b"), 2)};
}

}  // namespace

HamiltonianInput parse_hamiltonian(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("input must be a JSON object");
    }
    const bool has_matrix = doc.contains("matrix");
    const bool has_pauli = doc.contains("pauli");
    if (has_matrix == has_pauli) {
        throw ParseError("input must contain exactly one of \"matrix\" or \"pauli\"");
    }
    std::string units;
    if (doc.contains("units")) {
        if (!doc["units"].is_string()) {
            throw ParseError("units must be a string");
        }
        units = doc["units"].get<std::string>();
    }
    ComplexMatrix m = has_matrix ? parse_matrix(doc["matrix"]) : pauli_reconstruct(parse_pauli(doc["pauli"]));
    return HamiltonianInput{TwoQubitHamiltonian(m), sha256_hex(text), units};
}

HamiltonianInput read_hamiltonian_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_hamiltonian(ss.str());
}

std::string sha256_hex(const std::string &bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; i++) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

std::string tool_version() {
    return ENTCAP_VERSION;
}

json number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    if (x == 0) {
        return 0.0;
    }
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::scientific, 11);
    double rounded = 0;
    std::from_chars(buf.data(), res.ptr, rounded);
    return rounded;
}

json number(const std::optional<double> &x) {
    return x ? number(*x) : json(nullptr);
}

namespace {

std::string format_float(double x) {
    std::array<char, 64> buf{};
    // %.12g through to_chars keeps the output locale independent.
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
    std::string s(buf.data(), res.ptr);
    return s == "-0" ? "0" : s;
}

bool is_scalar(const json &j) {
    return !j.is_object() && !j.is_array();
}

void write(const json &j, int indent, std::string &out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto &[k, v] : j.items()) {
            out += first ? "" : ",\n";
            first = false;
            out += pad + json(k).dump() + ": ";
            write(v, indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(), is_scalar);
        if (j.empty() || flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); i++) {
                out += i ? ", " : "";
                write(j[i], indent, out);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); i++) {
            out += i ? ",\n" : "";
            out += pad;
            write(j[i], indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (j.is_number_float()) {
        out += format_float(j.get<double>());
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const json &doc) {
    std::string out;
    write(doc, 0, out);
    return out + "\n";
}

json to_json(const AnalysisReport &report) {
    const auto &p = report.provenance;
    const auto &c = report.capability;
    const auto &a = report.ancilla;
    json doc;
    doc["provenance"] = json{{"input_sha256", p.input_sha256},
                             {"tool_version", p.tool_version},
                             {"seed", p.seed ? json(*p.seed) : json(nullptr)}};
    doc["capability"] = json{{"mu", vec3(c.mu)},
                             {"det_sign", c.det_sign},
                             {"h_max", number(c.h_max)},
                             {"h_tilde_max", number(c.h_tilde_max)},
                             {"p0", number(c.p0)},
                             {"e_at_p0", number(c.e_at_p0)},
                             {"f_at_p0", number(c.f_at_p0)},
                             {"gamma_max", number(c.gamma_max)},
                             {"tau_h", number(c.tau_h)},
                             {"dropped_local_terms", json{{"alpha", vec3(c.dropped_local_terms.alpha)},
                                                          {"beta", vec3(c.dropped_local_terms.beta)},
                                                          {"trace_part", number(c.dropped_local_terms.trace_part)}}}};
    doc["ancilla"] = json{{"h_tilde_max", number(a.h_tilde_max)},
                          {"p_tilde0", number(a.p_tilde0)},
                          {"f_tilde_at_p0", number(a.f_tilde_at_p0)},
                          {"e_at_p_tilde0", number(a.e_at_p_tilde0)},
                          {"gamma_tilde_max", number(a.gamma_tilde_max)},
                          {"ratio_vs_no_ancilla", number(a.ratio_vs_no_ancilla)},
                          {"crossover_e", number(a.crossover_e)}};
    return doc;
}

AnalysisReport analysis_report_from_json(const json &doc) {
    AnalysisReport r;
    const json &p = doc.at("provenance");
    r.provenance.input_sha256 = p.at("input_sha256").get<std::string>();
    r.provenance.tool_version = p.at("tool_version").get<std::string>();
    if (!p.at("seed").is_null()) {
        r.provenance.seed = p.at("seed").get<std::uint64_t>();
    }
    const json &c = doc.at("capability");
    r.capability.mu = vec3_from(c.at("mu"));
    r.capability.det_sign = c.at("det_sign").get<int>();
    r.capability.h_max = c.at("h_max").get<double>();
    r.capability.h_tilde_max = c.at("h_tilde_max").get<double>();
    r.capability.p0 = c.at("p0").get<double>();
    r.capability.e_at_p0 = c.at("e_at_p0").get<double>();
    r.capability.f_at_p0 = c.at("f_at_p0").get<double>();
    r.capability.gamma_max = c.at("gamma_max").get<double>();
    r.capability.tau_h = optional_number(c.at("tau_h"));
    const json &d = c.at("dropped_local_terms");
    r.capability.dropped_local_terms.alpha = vec3_from(d.at("alpha"));
    r.capability.dropped_local_terms.beta = vec3_from(d.at("beta"));
    r.capability.dropped_local_terms.trace_part = d.at("trace_part").get<double>();
    const json &a = doc.at("ancilla");
    r.ancilla.h_tilde_max = a.at("h_tilde_max").get<double>();
    r.ancilla.p_tilde0 = a.at("p_tilde0").get<double>();
    r.ancilla.f_tilde_at_p0 = a.at("f_tilde_at_p0").get<double>();
    r.ancilla.e_at_p_tilde0 = a.at("e_at_p_tilde0").get<double>();
    r.ancilla.gamma_tilde_max = a.at("gamma_tilde_max").get<double>();
    r.ancilla.ratio_vs_no_ancilla = optional_number(a.at("ratio_vs_no_ancilla"));
    r.ancilla.crossover_e = optional_number(a.at("crossover_e"));
    return r;
}

json schedule_to_json(const SimulationSchedule &schedule) {
    json steps = json::array();
    for (const PulseStep &s : schedule.steps) {
        steps.push_back(json{{"pre_local", local_pair_json(s.pre_local)},
                             {"duration", number(s.duration)},
                             {"post_local", local_pair_json(s.post_local)}});
    }
    return json{{"target_time", number(schedule.target_time)},
                {"native_time", number(schedule.native_time)},
                {"alpha", number(schedule.alpha)},
                {"time_bound", number(schedule.time_bound)},
                {"steps", std::move(steps)}};
}

SimulationSchedule schedule_from_json(const json &doc) {
    SimulationSchedule s;
    s.target_time = doc.at("target_time").get<double>();
    s.native_time = doc.at("native_time").get<double>();
    s.alpha = doc.at("alpha").is_null() ? std::numeric_limits<double>::infinity() : doc.at("alpha").get<double>();
    s.time_bound = doc.at("time_bound").get<double>();
    for (const json &j : doc.at("steps")) {
        PulseStep step;
        step.pre_local = local_pair_from(j.at("pre_local"));
        step.duration = j.at("duration").get<double>();
        step.post_local = local_pair_from(j.at("post_local"));
        s.steps.push_back(std::move(step));
    }
    return s;
}

std::string trace_to_csv(const ProtocolTrace &trace) {
    std::ostringstream out;
    write_trace_csv(out, trace);
    return out.str();
}

json trace_to_json(const ProtocolTrace &trace, const Provenance &provenance) {
    json records = json::array();
    for (const auto &r : trace.records) {
        records.push_back(json{{"t", number(r.t)},
                               {"P", number(r.p)},
                               {"E", number(r.e)},
                               {"gamma", number(r.gamma)},
                               {"deviation", number(r.deviation)}});
    }
    double worst_drift = 0;
    for (double d : trace.tail_drift) {
        worst_drift = std::max(worst_drift, d);
    }
    return json{{"provenance", json{{"input_sha256", provenance.input_sha256},
                                    {"tool_version", provenance.tool_version},
                                    {"seed", nullptr}}},
                {"total_steps", trace.total_steps},
                {"max_norm_defect", number(trace.max_norm_defect)},
                {"max_restoration_change", number(trace.max_restoration_change)},
                {"max_tail_drift", number(worst_drift)},
                {"records", std::move(records)}};
}

}  // namespace entcap::cli
