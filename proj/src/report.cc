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

#include "qmaxent/report.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "qmaxent/errors.h"
#include "qmaxent/obs_parser.h"

namespace qmaxent {

namespace {

[[noreturn]] void schema_error(const std::string &message) {
    throw Error(ErrorCode::SchemaError, message);
}

void require_keys(const Json &obj, const std::string &where, const std::set<std::string> &allowed) {
    if (!obj.is_object()) {
        schema_error(where + " must be an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.count(key)) {
            schema_error(where + " has unknown field \"" + key + "\"");
        }
    }
}

double number_field(const Json &obj, const char *key, const std::string &where) {
    const Json &v = obj.at(key);
    if (!v.is_number()) {
        schema_error(where + "." + key + " must be a number");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        schema_error(where + "." + key + " must be finite");
    }
    return d;
}

int integer_field(const Json &obj, const char *key, const std::string &where, int lo, int hi) {
    const Json &v = obj.at(key);
    if (!v.is_number_integer()) {
        schema_error(where + "." + key + " must be an integer");
    }
    auto i = v.get<long long>();
    if (i < lo || i > hi) {
        schema_error(where + "." + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(i);
}

double positive_field(const Json &obj, const char *key, const std::string &where) {
    double d = number_field(obj, key, where);
    if (!(d > 0)) {
        schema_error(where + "." + key + " must be positive");
    }
    return d;
}

void parse_scan(const Json &scan, ScanSpec &spec) {
    const std::string where = "options.scan";
    require_keys(scan, where,
                 {"coarse_resolution", "refinement_rounds", "shrink_factor", "refine_resolution",
                  "max_feasibility_rounds", "positivity_tol"});
    if (scan.contains("coarse_resolution")) {
        spec.coarse_resolution = integer_field(scan, "coarse_resolution", where, 1, 1001);
    }
    if (scan.contains("refinement_rounds")) {
        spec.refinement_rounds = integer_field(scan, "refinement_rounds", where, 0, 100);
    }
    if (scan.contains("shrink_factor")) {
        spec.shrink_factor = number_field(scan, "shrink_factor", where);
        if (!(spec.shrink_factor > 0 && spec.shrink_factor < 1)) {
            schema_error(where + ".shrink_factor must lie in (0, 1)");
        }
    }
    if (scan.contains("refine_resolution")) {
        spec.refine_resolution = integer_field(scan, "refine_resolution", where, 0, 1001);
    }
    if (scan.contains("max_feasibility_rounds")) {
        spec.max_feasibility_rounds = integer_field(scan, "max_feasibility_rounds", where, 0, 1000);
    }
    if (scan.contains("positivity_tol")) {
        spec.positivity_tol = positive_field(scan, "positivity_tol", where);
    }
}

void parse_options(const Json &opts, SolverOptions &out) {
    const std::string where = "options";
    require_keys(opts, where, {"residual_tol", "max_iter", "multiplier_cap", "step_tol", "disable_closed_forms", "scan"});
    if (opts.contains("residual_tol")) {
        out.residual_tol = positive_field(opts, "residual_tol", where);
    }
    if (opts.contains("max_iter")) {
        out.max_iter = integer_field(opts, "max_iter", where, 1, 100000);
    }
    if (opts.contains("multiplier_cap")) {
        out.multiplier_cap = positive_field(opts, "multiplier_cap", where);
    }
    if (opts.contains("step_tol")) {
        out.step_tol = positive_field(opts, "step_tol", where);
    }
    if (opts.contains("disable_closed_forms")) {
        if (!opts.at("disable_closed_forms").is_boolean()) {
            schema_error("options.disable_closed_forms must be a boolean");
        }
        out.disable_closed_forms = opts.at("disable_closed_forms").get<bool>();
    }
    if (opts.contains("scan")) {
        parse_scan(opts.at("scan"), out.scan);
    }
}

// %.17g keeps every binary64 value exact under a correct reader.
std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_leaf_container(const Json &v) {
    for (const auto &item : v) {
        if (item.is_structured()) {
            return false;
        }
    }
    return true;
}

void write_value(const Json &v, std::string &out, int depth) {
    switch (v.type()) {
        case Json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        case Json::value_t::object:
        case Json::value_t::array: {
            bool object = v.is_object();
            if (v.empty()) {
                out += object ? "{}" : "[]";
                return;
            }
            bool inline_form = is_leaf_container(v);
            std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
            out += object ? '{' : '[';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += inline_form ? ", " : ",";
                }
                first = false;
                if (!inline_form) {
                    out += '\n';
                    out += pad;
                }
                if (object) {
                    out += Json(it.key()).dump();
                    out += ": ";
                }
                write_value(*it, out, depth + 1);
            }
            if (!inline_form) {
                out += '\n';
                out += std::string(static_cast<std::size_t>(2 * depth), ' ');
            }
            out += object ? '}' : ']';
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

Json double_list(const std::vector<double> &values) {
    Json arr = Json::array();
    for (double v : values) {
        arr.push_back(v);
    }
    return arr;
}

}  // namespace

ReconstructionRequest parse_request(const Json &doc) {
    require_keys(doc, "request", {"n_spins", "observables", "options", "level", "source"});
    if (!doc.contains("n_spins")) {
        schema_error("request.n_spins is required");
    }
    if (!doc.contains("observables")) {
        schema_error("request.observables is required");
    }
    ReconstructionRequest req;
    req.n_spins = integer_field(doc, "n_spins", "request", 1, 3);
    const Json &obs = doc.at("observables");
    if (!obs.is_array()) {
        schema_error("request.observables must be an array");
    }
    std::set<PauliString> seen;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        std::string where = "request.observables[" + std::to_string(i) + "]";
        const Json &item = obs[i];
        require_keys(item, where, {"expr", "mean"});
        if (!item.contains("expr") || !item.at("expr").is_string()) {
            schema_error(where + ".expr must be a string");
        }
        if (!item.contains("mean")) {
            schema_error(where + ".mean is required");
        }
        double mean = number_field(item, "mean", where);
        if (std::abs(mean) > 1) {
            schema_error(where + ".mean = " + format_double(mean) + " lies outside [-1, 1]");
        }
        std::string expr = item.at("expr").get<std::string>();
        PauliString s = parse_observable(expr, req.n_spins);
        if (s.is_identity()) {
            schema_error(where + ".expr is the identity, which is not an observable");
        }
        if (!seen.insert(s).second) {
            schema_error(where + ".expr repeats " + format_observable(s));
        }
        req.observables.push_back({expr, s, mean});
    }
    if (doc.contains("options")) {
        parse_options(doc.at("options"), req.options);
    }
    if (doc.contains("level")) {
        if (!doc.at("level").is_string()) {
            schema_error("request.level must be a string");
        }
        req.level = doc.at("level").get<std::string>();
    }
    if (doc.contains("source") && !doc.at("source").is_object()) {
        schema_error("request.source must be an object");
    }
    return req;
}

ReconstructionRequest read_request(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    return parse_request(doc);
}

ConstraintSet request_constraints(const ReconstructionRequest &request) {
    std::vector<PauliString> obs;
    std::vector<double> means;
    for (const auto &m : request.observables) {
        obs.push_back(m.observable);
        means.push_back(m.mean);
    }
    return ConstraintSet(ObservationLevel(request.n_spins, obs), means);
}

Json request_json(const ConstraintSet &c, const Json &source) {
    Json doc;
    doc["n_spins"] = c.spins();
    if (auto key = identify_level(c.level())) {
        doc["level"] = *key;
    } else if (!c.level().name().empty()) {
        doc["level"] = c.level().name();
    }
    if (!source.is_null()) {
        doc["source"] = source;
    }
    Json obs = Json::array();
    for (std::size_t i = 0; i < c.level().size(); ++i) {
        Json item;
        item["expr"] = format_observable(c.level().observables()[i]);
        item["mean"] = c.means()[i];
        obs.push_back(item);
    }
    doc["observables"] = obs;
    return doc;
}

Json report_json(const ReconstructionResult &r, const ObservationLevel &level) {
    Json doc;
    doc["n_spins"] = r.rho.spins();
    doc["method"] = std::string(method_name(r.method));
    doc["units"] = "nats";
    doc["entropy"] = r.entropy;
    doc["linear_entropy"] = linear_entropy(r.rho);
    doc["eigenvalues"] = double_list(r.rho.eigenvalues());
    doc["residual"] = r.residual;
    Json observables = Json::array();
    for (const auto &s : level.observables()) {
        observables.push_back(format_observable(s));
    }
    doc["observables"] = observables;
    if (r.multipliers) {
        std::vector<double> m(r.multipliers->data(), r.multipliers->data() + r.multipliers->size());
        doc["multipliers"] = double_list(m);
    } else {
        doc["multipliers"] = nullptr;
    }
    doc["partition"] = r.partition ? Json(*r.partition) : Json(nullptr);
    Json predicted = Json::array();
    const auto basis = operator_basis(r.rho.spins());
    for (const auto &s : basis) {
        double v = r.predicted.coefficient(s);
        if (!s.is_identity() && std::abs(v) > 1e-9) {
            Json item;
            item["expr"] = format_observable(s);
            item["value"] = v;
            item["measured"] = level.contains(s);
            predicted.push_back(item);
        }
    }
    doc["predicted"] = predicted;
    Json scan = Json::array();
    for (const auto &[s, v] : r.scan_point) {
        Json item;
        item["expr"] = format_observable(s);
        item["value"] = v;
        scan.push_back(item);
    }
    doc["scan_point"] = scan;
    doc["iterations"] = r.iterations;
    Json rho = Json::array();
    const ComplexMatrix &m = r.rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Json cell;
            cell["re"] = m(i, j).real();
            cell["im"] = m(i, j).imag();
            row.push_back(cell);
        }
        rho.push_back(row);
    }
    doc["rho"] = rho;
    return doc;
}

std::string write_json(const Json &doc) {
    std::string out;
    write_value(doc, out, 0);
    out += '\n';
    return out;
}

ReconstructionReport read_report(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        ReconstructionReport rep;
        rep.n_spins = doc.at("n_spins").get<int>();
        if (rep.n_spins < 1 || rep.n_spins > 3) {
            schema_error("report.n_spins must lie in [1, 3]");
        }
        if (doc.at("units").get<std::string>() != "nats") {
            schema_error("report.units must be \"nats\"");
        }
        rep.entropy = doc.at("entropy").get<double>();
        rep.linear_entropy = doc.at("linear_entropy").get<double>();
        rep.eigenvalues = doc.at("eigenvalues").get<std::vector<double>>();
        rep.method = doc.at("method").get<std::string>();
        if (!doc.at("multipliers").is_null()) {
            rep.multipliers = doc.at("multipliers").get<std::vector<double>>();
        }
        for (const auto &item : doc.at("predicted")) {
            rep.predicted.emplace_back(item.at("expr").get<std::string>(), item.at("value").get<double>());
        }
        rep.residual = doc.at("residual").get<double>();
        const Json &rho = doc.at("rho");
        auto dim = Eigen::Index{1} << rep.n_spins;
        if (!rho.is_array() || static_cast<Eigen::Index>(rho.size()) != dim) {
            schema_error("report.rho must have " + std::to_string(dim) + " rows");
        }
        rep.rho.resize(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Json &row = rho[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
                schema_error("report.rho row " + std::to_string(i) + " has the wrong length");
            }
            for (Eigen::Index j = 0; j < dim; ++j) {
                const Json &cell = row[static_cast<std::size_t>(j)];
                rep.rho(i, j) = Complex(cell.at("re").get<double>(), cell.at("im").get<double>());
            }
        }
        return rep;
    } catch (const Json::exception &e) {
        schema_error(std::string("malformed report: ") + e.what());
    }
}

}  // namespace qmaxent
