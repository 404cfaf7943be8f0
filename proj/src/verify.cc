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

#include "qmaxent/verify.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "qmaxent/closed_forms.h"
#include "qmaxent/errors.h"
#include "qmaxent/solver.h"
#include "qmaxent/states.h"

namespace qmaxent {

namespace {

const double kLn2 = std::log(2.0);
const double kPi = std::numbers::pi;

class Checks {
   public:
    void near(std::string name, double observed, double expected, double tol) {
        bool ok = std::abs(observed - expected) <= tol;
        out_.push_back({std::move(name), ok, observed, expected, tol, Relation::Near});
    }
    void at_most(std::string name, double observed, double bound) {
        out_.push_back({std::move(name), observed <= bound, observed, bound, 0, Relation::AtMost});
    }
    void above(std::string name, double observed, double bound) {
        out_.push_back({std::move(name), observed > bound, observed, bound, 0, Relation::Above});
    }
    std::vector<CheckOutcome> take() {
        return std::move(out_);
    }

   private:
    std::vector<CheckOutcome> out_;
};

std::string fmt(const char *pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

ReconstructionResult reconstruct_level(const DensityMatrix &rho, const ObservationLevel &level, bool closed = true) {
    SolverOptions opts;
    opts.disable_closed_forms = !closed;
    return reconstruct(constraints_from_state(rho, level), opts);
}

double binary_entropy(double p) {
    return von_neumann_entropy_of_spectrum({p, 1 - p});
}

void bell_suite(Checks &checks) {
    for (double phi : {0.3, 1.1, 2.5}) {
        DensityMatrix rho = bell(phi).density();
        const std::array<std::pair<const char *, double>, 4> ladder{
            {{"A2", 2 * kLn2}, {"B2", kLn2}, {"C2", kLn2}, {"D2", kLn2}}};
        for (const auto &[key, expected] : ladder) {
            checks.near(std::string("bell ladder S_") + key + fmt(" phi=%.2f", phi),
                        reconstruct_level(rho, named_level(key)).entropy, expected, 1e-6);
        }
    }
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        double phi = 2 * kPi * k / 20;
        double s = reconstruct_level(bell(phi).density(), named_level("E2")).entropy;
        worst = std::max(worst, std::abs(s - binary_entropy((1 - std::cos(phi)) / 2)));
    }
    checks.at_most("E2 entropy vs binary formula over 20 phases", worst, 1e-6);
    {
        DensityMatrix rho = bell(0).density();
        ReconstructionResult r = reconstruct_level(rho, named_level("E2"));
        checks.at_most("E2 reconstructs Bell(0): entropy", r.entropy, 1e-8);
        checks.at_most("E2 reconstructs Bell(0): max-norm", max_abs_difference(r.rho.matrix(), rho.matrix()), 1e-8);
        for (double phi : {0.0, kPi}) {
            DensityMatrix phi_state = bell(phi, BellFamily::PhiPm).density();
            ReconstructionResult rp = reconstruct_level(phi_state, named_level("E2"));
            checks.at_most(fmt("E2 reconstructs Phi state (phi=%.4f): max-norm", phi),
                           max_abs_difference(rp.rho.matrix(), phi_state.matrix()), 1e-8);
        }
    }
    for (int k = 0; k < 10; ++k) {
        double phi = 2 * kPi * k / 10 + 0.1;
        DensityMatrix rho = bell(phi).density();
        ReconstructionResult closed = reconstruct_level(rho, named_level("G2"));
        ReconstructionResult generic = reconstruct_level(rho, named_level("G2"), false);
        checks.at_most(fmt("G2 closed form pure at phi=%.3f", phi), closed.entropy, 1e-8);
        checks.at_most(fmt("G2 generic path agrees at phi=%.3f", phi),
                       max_abs_difference(generic.rho.matrix(), rho.matrix()), 1e-6);
    }
    for (double phi : {0.4, 2.0}) {
        DensityMatrix rho = bell(phi).density();
        ScanSpec spec;
        spec.free_coefficients = {PauliString::from_letters("ZZ")};
        ReconstructionResult r = solve_primal_scan(constraints_from_state(rho, named_level("H2")), spec);
        checks.near(fmt("H2 scan argmax t at phi=%.2f", phi), r.scan_point.at(0).second, 1.0, 1e-3);
        checks.at_most(fmt("H2 scan state vs Bell at phi=%.2f", phi),
                       max_abs_difference(r.rho.matrix(), rho.matrix()), 1e-3);
        ConstraintSet c = constraints_from_state(rho, named_level("H2"));
        checks.near(fmt("H2 predicted t at phi=%.2f", phi), oh_intermediates({c.means()[0], c.means()[1],
                                                                                c.means()[2], c.means()[3]})
                                                                 .t,
                    1.0, 1e-12);
    }
    DensityMatrix quarter = bell(kPi / 4).density();
    for (const char *removed : {"XY", "YX"}) {
        ObservationLevel level = reduce(named_level("G2"), {PauliString::from_letters(removed)});
        checks.above(std::string("G2 without ") + removed + " is incomplete for Bell(pi/4)",
                     reconstruct_level(quarter, level).entropy, 0.01);
    }
    for (const char *removed : {"XX", "YY", "ZZ"}) {
        ObservationLevel level = reduce(named_level("G2"), {PauliString::from_letters(removed)});
        checks.at_most(std::string("G2 without ") + removed + " stays complete for Bell(pi/4)",
                       reconstruct_level(quarter, level).entropy, 1e-6);
    }
}

void ghz_suite(Checks &checks) {
    DensityMatrix mixture = phase_averaged_ghz();
    for (bool closed : {true, false}) {
        std::string tag = closed ? " (closed form)" : " (generic)";
        SolverOptions opts;
        opts.disable_closed_forms = !closed;
        ReconstructionResult r = reconstruct(ConstraintSet(named_level("B3"), {1.0, 1.0}), opts);
        checks.at_most("B3 GHZ equals the two-term mixture" + tag,
                       max_abs_difference(r.rho.matrix(), mixture.matrix()), 1e-8);
        checks.near("B3 GHZ entropy is ln 2" + tag, r.entropy, kLn2, 1e-8);
        checks.near("B3 predicted ZIZ" + tag, r.predicted.coefficient(PauliString::from_letters("ZIZ")), 1.0, 1e-8);
    }
    for (const char *key : {"B3x", "B3y"}) {
        ReconstructionResult r = reconstruct_level(ghz(0.7).density(), named_level(key));
        checks.at_most(std::string(key) + " GHZ reconstruction equals the mixture",
                       max_abs_difference(r.rho.matrix(), mixture.matrix()), 1e-8);
    }
    for (int k = 0; k < 10; ++k) {
        double phi = 2 * kPi * k / 10 + 0.05;
        DensityMatrix rho = ghz(phi).density();
        ReconstructionResult r = reconstruct_level(rho, named_level("C3"));
        checks.at_most(fmt("C3 GHZ pure at phi=%.3f", phi), r.entropy, 1e-8);
        checks.at_most(fmt("C3 GHZ state at phi=%.3f", phi), max_abs_difference(r.rho.matrix(), rho.matrix()), 1e-8);
        double c = std::cos(phi);
        double s = std::sin(phi);
        const std::array<std::pair<const char *, double>, 7> predicted{{{"ZIZ", 1.0},
                                                                         {"XYY", -c},
                                                                         {"YXY", -c},
                                                                         {"YYX", -c},
                                                                         {"XXY", s},
                                                                         {"XYX", s},
                                                                         {"YXX", s}}};
        double worst = 0;
        for (const auto &[letters, value] : predicted) {
            worst = std::max(worst, std::abs(r.predicted.coefficient(PauliString::from_letters(letters)) - value));
        }
        checks.at_most(fmt("C3 predicted three-spin pattern at phi=%.3f", phi), worst, 1e-8);
    }
}

G2Means random_g2_means(std::mt19937_64 &rng) {
    ConstraintSet c = constraints_from_state(random_mixed_state(2, rng), named_level("G2"));
    return {c.means()[0], c.means()[1], c.means()[2], c.means()[3], c.means()[4]};
}

void appendix_suite(Checks &checks) {
    std::mt19937_64 rng(7);
    double eig = 0, entropy = 0, stationarity = 0, sum = 0, reduction = 0, oh_entropy = 0;
    for (int trial = 0; trial < 100; ++trial) {
        G2Means xi = random_g2_means(rng);
        OGIntermediates k = og_intermediates(xi);
        ReconstructionResult r = og_gcdo(xi);
        std::vector<double> expected;
        for (double m : k.m) {
            expected.push_back(m / 4);
        }
        std::sort(expected.rbegin(), expected.rend());
        std::vector<double> got = r.rho.eigenvalues();
        for (std::size_t i = 0; i < 4; ++i) {
            eig = std::max(eig, std::abs(got[i] - expected[i]));
        }
        entropy = std::max(entropy, std::abs(r.entropy - von_neumann_entropy(r.rho)));
        sum = std::max(sum, std::abs(k.m[0] + k.m[1] + k.m[2] + k.m[3] - 4));

        H2Means h{xi.xx, xi.xy, xi.yx, xi.yy};
        OHIntermediates hk = oh_intermediates(h);
        const double step = 1e-5;
        auto s_at = [&](double zz) {
            G2Means g = xi;
            g.zz = zz;
            return og_gcdo(g).entropy;
        };
        stationarity = std::max(stationarity, std::abs(s_at(hk.t + step) - s_at(hk.t - step)) / (2 * step));
        ReconstructionResult rh = oh_gcdo(h);
        G2Means at_t = xi;
        at_t.zz = hk.t;
        reduction = std::max(reduction, max_abs_difference(rh.rho.matrix(), og_gcdo(at_t).rho.matrix()));
        oh_entropy = std::max(oh_entropy, std::abs(rh.entropy - von_neumann_entropy(rh.rho)));
    }
    checks.at_most("eigenvalues of the G2 state equal M_i/4", eig, 1e-10);
    checks.at_most("G2 entropy from M_i equals eigenvalue entropy", entropy, 1e-10);
    checks.at_most("predicted ZZ is stationary for the G2 entropy", stationarity, 1e-6);
    checks.at_most("sum of M_i equals 4", sum, 1e-14);
    checks.at_most("H2 state equals G2 state at the predicted ZZ", reduction, 1e-12);
    checks.at_most("H2 entropy from N_i equals eigenvalue entropy", oh_entropy, 1e-10);
}

void single_suite(Checks &checks) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    double worst_a = 0, worst_b = 0, worst_c = 0, worst_pure = 0;
    for (int trial = 0; trial < 20; ++trial) {
        double theta = angle(rng);
        double phi = angle(rng);
        DensityMatrix rho = single_spin(theta, phi).density();
        double nx = std::sin(2 * theta) * std::cos(phi);
        double nz = std::cos(2 * theta);
        double p_a = (1 + std::abs(nz)) / 2;
        double p_b = (1 + std::hypot(nz, nx)) / 2;
        worst_a = std::max(worst_a, std::abs(reconstruct_level(rho, named_level("A1")).entropy - binary_entropy(p_a)));
        worst_b = std::max(worst_b, std::abs(reconstruct_level(rho, named_level("B1")).entropy - binary_entropy(p_b)));
        ReconstructionResult c = reconstruct_level(rho, named_level("C1"));
        worst_c = std::max(worst_c, c.entropy);
        worst_pure = std::max(worst_pure, max_abs_difference(c.rho.matrix(), rho.matrix()));
    }
    checks.at_most("A1 entropy matches p_A", worst_a, 1e-8);
    checks.at_most("B1 entropy matches p_B", worst_b, 1e-8);
    checks.at_most("C1 entropy vanishes", worst_c, 1e-8);
    checks.at_most("C1 returns the pure state", worst_pure, 1e-8);
}

void solver_suite(Checks &checks) {
    std::mt19937_64 rng(13);
    double entropy_gap = 0, state_gap = 0, identity_gap = 0;
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 10; ++trial) {
            DensityMatrix rho = random_mixed_state(n, rng);
            ObservationLevel level = n == 1 ? named_level("B1") : named_level("G2");
            ConstraintSet c = constraints_from_state(rho, level);
            ReconstructionResult dual = solve_dual(c);
            ReconstructionResult oracle = oracle_maxent(c);
            ReconstructionResult closed = *try_closed_form(c);
            entropy_gap = std::max({entropy_gap, std::abs(dual.entropy - oracle.entropy),
                                    std::abs(dual.entropy - closed.entropy)});
            state_gap = std::max({state_gap, max_abs_difference(dual.rho.matrix(), oracle.rho.matrix()),
                                  max_abs_difference(dual.rho.matrix(), closed.rho.matrix())});
            double dual_value = std::log(*dual.partition);
            for (std::size_t i = 0; i < c.means().size(); ++i) {
                dual_value += (*dual.multipliers)(static_cast<Eigen::Index>(i)) * c.means()[i];
            }
            identity_gap = std::max(identity_gap, std::abs(dual_value - dual.entropy));
        }
    }
    checks.at_most("dual, closed form and oracle entropies agree", entropy_gap, 1e-5);
    checks.at_most("dual, closed form and oracle states agree", state_gap, 1e-5);
    checks.at_most("dual entropy equals ln Z + lambda.G", identity_gap, 1e-8);
}

const std::vector<std::pair<std::string, std::function<void(Checks &)>>> &suites() {
    static const std::vector<std::pair<std::string, std::function<void(Checks &)>>> all = {
        {"bell", bell_suite}, {"ghz", ghz_suite},       {"appendix", appendix_suite},
        {"single", single_suite}, {"solver", solver_suite},
    };
    return all;
}

}  // namespace

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : suites()) {
            out.push_back(name);
        }
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<CheckOutcome> run_verify_suite(std::string_view suite) {
    Checks checks;
    bool found = false;
    for (const auto &[name, fn] : suites()) {
        if (suite == name || suite == "all") {
            fn(checks);
            found = true;
        }
    }
    if (!found) {
        throw Error(ErrorCode::InvalidArgument, "unknown verify suite \"" + std::string(suite) + "\"");
    }
    return checks.take();
}

std::string format_check(const CheckOutcome &check) {
    char buf[160];
    switch (check.relation) {
        case Relation::Near:
            std::snprintf(buf, sizeof buf, "observed=%.10g expected=%.10g tol=%.1e", check.observed, check.expected,
                          check.tolerance);
            break;
        case Relation::AtMost:
            std::snprintf(buf, sizeof buf, "observed=%.10g expected<=%.1e", check.observed, check.expected);
            break;
        case Relation::Above:
            std::snprintf(buf, sizeof buf, "observed=%.10g expected>%.4g", check.observed, check.expected);
            break;
    }
    return std::string(check.passed ? "PASS" : "FAIL") + "  " + check.name + "  " + buf;
}

}  // namespace qmaxent
