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

#include "qmaxent/closed_forms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmaxent/errors.h"

namespace qmaxent {

namespace {

constexpr double kMeanSlack = 1e-12;

// -p ln p - (1-p) ln (1-p) for p = (1 + r)/2.
double binary_entropy(double r) {
    return von_neumann_entropy_of_spectrum({(1 + r) / 2, (1 - r) / 2});
}

double entropy_of_weights(const std::array<double, 4> &w, double scale) {
    std::vector<double> spectrum;
    for (double v : w) {
        spectrum.push_back(std::max(v, 0.0) / scale);
    }
    return von_neumann_entropy_of_spectrum(spectrum);
}

// The analytic entropy is reported; it must agree with the eigenvalue route.
ReconstructionResult finish(const ComplexMatrix &rho, const ConstraintSet &c, double entropy) {
    ReconstructionResult r = make_result(rho, c, Method::ClosedForm);
    if (std::abs(r.entropy - entropy) > 1e-9) {
        throw std::logic_error("closed-form entropy " + std::to_string(entropy) + " disagrees with spectrum " +
                               std::to_string(r.entropy));
    }
    r.entropy = entropy;
    return r;
}

// sinh(x)/x, with the series near zero.
double sinhc(double x) {
    if (std::abs(x) < 1e-6) {
        return 1 + x * x / 6;
    }
    return std::sinh(x) / x;
}

ComplexMatrix kron_string(std::string_view letters) {
    return string_matrix(PauliString::from_letters(letters));
}

ConstraintSet level_constraints(std::string_view key, std::vector<double> means) {
    return ConstraintSet(named_level(key), std::move(means));
}

// Re-expresses multipliers computed in `from` order in the order of `to`.
void realign(ReconstructionResult &r, const ObservationLevel &from, const ObservationLevel &to) {
    if (!r.multipliers) {
        return;
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(to.size()));
    for (std::size_t i = 0; i < to.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = (*r.multipliers)(static_cast<Eigen::Index>(*from.position(to.observables()[i])));
    }
    r.multipliers = out;
}

}  // namespace

ReconstructionResult single_spin_gcdo(const SingleSpinMeans &means) {
    std::vector<PauliString> obs;
    std::vector<double> values;
    Eigen::Vector3d m = Eigen::Vector3d::Zero();
    // Z first so that the registered levels A1, B1, C1 come out in their order.
    const std::array<std::pair<const std::optional<double> *, char>, 3> parts{
        {{&means.z, 'Z'}, {&means.x, 'X'}, {&means.y, 'Y'}}};
    for (const auto &[value, letter] : parts) {
        if (*value) {
            obs.push_back(PauliString::from_letters(std::string(1, letter)));
            values.push_back(**value);
        }
    }
    m << means.x.value_or(0), means.y.value_or(0), means.z.value_or(0);
    double norm = m.norm();
    if (norm > 1 + kMeanSlack) {
        throw Error(ErrorCode::BlochNormExceeded, "single-spin Bloch vector has norm " + std::to_string(norm), norm);
    }
    norm = std::min(norm, 1.0);
    ComplexMatrix rho = (ComplexMatrix::Identity(2, 2) + m(0) * pauli_matrix(Axis::X) + m(1) * pauli_matrix(Axis::Y) +
                         m(2) * pauli_matrix(Axis::Z)) /
                        2.0;
    ConstraintSet c(ObservationLevel(1, obs), values);
    ReconstructionResult r = finish(rho, c, binary_entropy(norm));
    if (norm < 1) {
        // rho = exp(-l.sigma)/Z gives m = -tanh|l| l/|l|.
        double strength = std::atanh(norm);
        Eigen::VectorXd lambda(static_cast<Eigen::Index>(obs.size()));
        for (std::size_t i = 0; i < obs.size(); ++i) {
            lambda(static_cast<Eigen::Index>(i)) = norm > 0 ? -strength * values[i] / norm : 0.0;
        }
        r.multipliers = lambda;
        r.partition = 2 * std::cosh(strength);
    }
    return r;
}

OGIntermediates og_intermediates(const G2Means &xi) {
    OGIntermediates out;
    out.b_mean = Complex(xi.xx + xi.yy, -(xi.xy - xi.yx));
    out.d_mean = Complex(xi.xx - xi.yy, xi.xy + xi.yx);
    double abs_b = std::abs(out.b_mean);
    double abs_d = std::abs(out.d_mean);
    out.m = {1 + xi.zz + abs_d, 1 + xi.zz - abs_d, 1 - xi.zz + abs_b, 1 - xi.zz - abs_b};
    return out;
}

namespace {

void require_nonnegative(const std::array<double, 4> &w, const char *label) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < -kMeanSlack) {
            throw Error(ErrorCode::NonPhysicalMeans,
                        std::string(label) + std::to_string(i + 1) + " = " + std::to_string(w[i]) + " is negative",
                        w[i]);
        }
    }
}

ComplexMatrix og_matrix(double zz, Complex b_mean, Complex d_mean) {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = 1 + zz;
    rho(1, 1) = rho(2, 2) = 1 - zz;
    rho(0, 3) = std::conj(d_mean);
    rho(3, 0) = d_mean;
    rho(1, 2) = std::conj(b_mean);
    rho(2, 1) = b_mean;
    return rho / 4.0;
}

}  // namespace

ReconstructionResult og_gcdo(const G2Means &xi) {
    OGIntermediates k = og_intermediates(xi);
    require_nonnegative(k.m, "M");
    ConstraintSet c = level_constraints("G2", {xi.zz, xi.xx, xi.xy, xi.yx, xi.yy});
    ReconstructionResult r = finish(og_matrix(xi.zz, k.b_mean, k.d_mean), c, entropy_of_weights(k.m, 4));
    try {
        OGMultipliers mult = og_multipliers(xi);
        r.multipliers = Eigen::Map<const Eigen::VectorXd>(mult.lambda.data(), 5);
        r.partition = mult.partition;
    } catch (const Error &) {
        // Pure-state boundary: no finite multipliers.
    }
    return r;
}

OGMultipliers og_multipliers(const G2Means &xi) {
    OGIntermediates k = og_intermediates(xi);
    require_nonnegative(k.m, "M");
    for (std::size_t i = 0; i < 4; ++i) {
        if (k.m[i] <= kMeanSlack) {
            throw Error(ErrorCode::BoundaryDetected,
                        "M" + std::to_string(i + 1) + " vanishes; the multipliers are unbounded", k.m[i]);
        }
    }
    const auto &m = k.m;
    OGMultipliers out;
    out.a = 0.25 * std::log((m[2] * m[3]) / (m[0] * m[1]));
    double abs_b = 0.5 * std::log(m[2] / m[3]);
    double abs_d = 0.5 * std::log(m[0] / m[1]);
    // b/|b| = -B/|B| and d/|d| = -D/|D|.
    out.b = std::abs(k.b_mean) > 0 ? -abs_b * k.b_mean / std::abs(k.b_mean) : Complex(0);
    out.d = std::abs(k.d_mean) > 0 ? -abs_d * k.d_mean / std::abs(k.d_mean) : Complex(0);
    double l_xx = (out.b.real() + out.d.real()) / 2;
    double l_yy = (out.b.real() - out.d.real()) / 2;
    double l_xy = (out.d.imag() - out.b.imag()) / 2;
    double l_yx = (out.d.imag() + out.b.imag()) / 2;
    out.lambda = {out.a, l_xx, l_xy, l_yx, l_yy};
    out.partition = 4 / std::pow(m[0] * m[1] * m[2] * m[3], 0.25);
    return out;
}

ComplexMatrix og_density_from_multipliers(double a, Complex b, Complex d) {
    double abs_b = std::abs(b);
    double abs_d = std::abs(d);
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    double outer = std::exp(-a);
    double inner = std::exp(a);
    e(0, 0) = e(3, 3) = outer * std::cosh(abs_d);
    e(0, 3) = -outer * sinhc(abs_d) * std::conj(d);
    e(3, 0) = -outer * sinhc(abs_d) * d;
    e(1, 1) = e(2, 2) = inner * std::cosh(abs_b);
    e(1, 2) = -inner * sinhc(abs_b) * std::conj(b);
    e(2, 1) = -inner * sinhc(abs_b) * b;
    double z = 2 * outer * std::cosh(abs_d) + 2 * inner * std::cosh(abs_b);
    return e / z;
}

OHIntermediates oh_intermediates(const H2Means &xi) {
    G2Means g{0, xi.xx, xi.xy, xi.yx, xi.yy};
    OGIntermediates k = og_intermediates(g);
    double abs_b = std::abs(k.b_mean);
    double abs_d = std::abs(k.d_mean);
    OHIntermediates out;
    out.n = {1 + (abs_d + abs_b) / 2, 1 + (abs_d - abs_b) / 2, 1 - (abs_d - abs_b) / 2, 1 - (abs_d + abs_b) / 2};
    out.t = xi.xy * xi.yx - xi.xx * xi.yy;
    return out;
}

ReconstructionResult oh_gcdo(const H2Means &xi) {
    OHIntermediates k = oh_intermediates(xi);
    require_nonnegative(k.n, "N");
    G2Means g{k.t, xi.xx, xi.xy, xi.yx, xi.yy};
    OGIntermediates full = og_intermediates(g);
    ConstraintSet c = level_constraints("H2", {xi.xx, xi.xy, xi.yx, xi.yy});
    ReconstructionResult r = finish(og_matrix(k.t, full.b_mean, full.d_mean), c, entropy_of_weights(k.n, 2));
    try {
        OGMultipliers mult = og_multipliers(g);
        // The ZZ multiplier of the G2 form vanishes at the predicted mean.
        r.multipliers = Eigen::Map<const Eigen::VectorXd>(mult.lambda.data() + 1, 4);
        r.partition = mult.partition;
    } catch (const Error &) {
    }
    return r;
}

namespace {

void require_unit_interval(double v, const char *label) {
    if (std::abs(v) > 1 + kMeanSlack) {
        throw Error(ErrorCode::InvalidArgument, std::string(label) + " = " + std::to_string(v) + " lies outside [-1, 1]",
                    v);
    }
}

}  // namespace

ReconstructionResult ghz_b3_gcdo(double xi_12, double xi_23) {
    require_unit_interval(xi_12, "xi_12");
    require_unit_interval(xi_23, "xi_23");
    ComplexMatrix id = ComplexMatrix::Identity(8, 8);
    ComplexMatrix rho = (id + xi_12 * kron_string("ZZI")) * (id + xi_23 * kron_string("IZZ")) / 8.0;
    for (Eigen::Index i = 0; i < 8; ++i) {
        if (rho(i, i).real() < -kMeanSlack) {
            throw std::logic_error("B3 closed form produced a negative population");
        }
    }
    ConstraintSet c = level_constraints("B3", {xi_12, xi_23});
    double entropy = binary_entropy(std::min(std::abs(xi_12), 1.0)) +
                     binary_entropy(std::min(std::abs(xi_23), 1.0)) + std::log(2.0);
    ReconstructionResult r = finish(rho, c, entropy);
    if (std::abs(xi_12) < 1 && std::abs(xi_23) < 1) {
        double l1 = -std::atanh(xi_12);
        double l2 = -std::atanh(xi_23);
        r.multipliers = Eigen::Vector2d(l1, l2);
        r.partition = 8 * std::cosh(l1) * std::cosh(l2);
    }
    return r;
}

ReconstructionResult ghz_c3_gcdo(double xi_12, double xi_23, double zeta_x, double zeta_y) {
    double radius = std::hypot(zeta_x, zeta_y);
    if (std::abs(xi_12) > 1 + kMeanSlack || std::abs(xi_23) > 1 + kMeanSlack || radius > 1 + kMeanSlack) {
        throw Error(ErrorCode::NonPhysicalMeans, "C3 means give a matrix with a negative eigenvalue",
                    std::max({std::abs(xi_12), std::abs(xi_23), radius}));
    }
    // The Z correlations commute with XXX and YYY, so the state factorizes.
    ComplexMatrix id = ComplexMatrix::Identity(8, 8);
    ComplexMatrix rho = (id + xi_12 * kron_string("ZZI")) * (id + xi_23 * kron_string("IZZ")) *
                        (id + zeta_x * kron_string("XXX") + zeta_y * kron_string("YYY")) / 8.0;
    rho = (rho + rho.adjoint()) / 2.0;
    ConstraintSet c = level_constraints("C3", {xi_12, xi_23, zeta_x, zeta_y});
    double entropy = binary_entropy(std::min(std::abs(xi_12), 1.0)) +
                     binary_entropy(std::min(std::abs(xi_23), 1.0)) + binary_entropy(std::min(radius, 1.0));
    ReconstructionResult r = finish(rho, c, entropy);
    if (std::abs(xi_12) < 1 && std::abs(xi_23) < 1 && radius < 1) {
        double l1 = -std::atanh(xi_12);
        double l2 = -std::atanh(xi_23);
        double strength = std::atanh(radius);
        double lx = radius > 0 ? -strength * zeta_x / radius : 0.0;
        double ly = radius > 0 ? -strength * zeta_y / radius : 0.0;
        r.multipliers = Eigen::Vector4d(l1, l2, lx, ly);
        r.partition = 8 * std::cosh(l1) * std::cosh(l2) * std::cosh(strength);
    }
    return r;
}

std::optional<ReconstructionResult> try_closed_form(const ConstraintSet &c) {
    const auto &level = c.level();
    auto mean = [&](std::string_view letters) { return c.mean_of(PauliString::from_letters(letters)); };
    if (level.spins() == 1 && level.size() > 0) {
        ReconstructionResult r = single_spin_gcdo({mean("X"), mean("Y"), mean("Z")});
        std::vector<PauliString> order;
        for (const char *l : {"Z", "X", "Y"}) {
            if (level.contains(PauliString::from_letters(l))) {
                order.push_back(PauliString::from_letters(l));
            }
        }
        realign(r, ObservationLevel(1, order), level);
        return r;
    }
    auto matches = [&](std::string_view key) {
        const auto &keys = registered_level_keys();
        return std::find(keys.begin(), keys.end(), key) != keys.end() && level.same_observables(named_level(key));
    };
    std::optional<ReconstructionResult> r;
    std::string key;
    if (level.spins() == 2 && matches("G2")) {
        key = "G2";
        r = og_gcdo({*mean("ZZ"), *mean("XX"), *mean("XY"), *mean("YX"), *mean("YY")});
    } else if (level.spins() == 2 && matches("H2")) {
        key = "H2";
        r = oh_gcdo({*mean("XX"), *mean("XY"), *mean("YX"), *mean("YY")});
    } else if (level.spins() == 3 && matches("B3")) {
        key = "B3";
        r = ghz_b3_gcdo(*mean("ZZI"), *mean("IZZ"));
    } else if (level.spins() == 3 && matches("C3")) {
        key = "C3";
        r = ghz_c3_gcdo(*mean("ZZI"), *mean("IZZ"), *mean("XXX"), *mean("YYY"));
    }
    if (r) {
        realign(*r, named_level(key), level);
    }
    return r;
}

}  // namespace qmaxent
