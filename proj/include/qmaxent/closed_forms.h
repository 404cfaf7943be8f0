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

#ifndef QMAXENT_CLOSED_FORMS_H
#define QMAXENT_CLOSED_FORMS_H

#include <array>
#include <optional>

#include "qmaxent/result.h"

namespace qmaxent {

/// Measured single-spin means; absent components are unmeasured.
struct SingleSpinMeans {
    std::optional<double> x;
    std::optional<double> y;
    std::optional<double> z;
};

/// rho = (I + m.sigma)/2 with the unmeasured components set to zero.
/// Throws BlochNormExceeded when |m| > 1 + 1e-12.
ReconstructionResult single_spin_gcdo(const SingleSpinMeans &means);

/// Two-spin correlations measured on the G2 level.
struct G2Means {
    double zz = 0;
    double xx = 0;
    double xy = 0;
    double yx = 0;
    double yy = 0;
};

/// Two-spin correlations measured on the H2 level (G2 without ZZ).
struct H2Means {
    double xx = 0;
    double xy = 0;
    double yx = 0;
    double yy = 0;
};

struct OGIntermediates {
    /// B = xx + yy - i(xy - yx), D = xx - yy + i(xy + yx).
    Complex b_mean;
    Complex d_mean;
    /// M1,2 = 1 + zz +- |D|, M3,4 = 1 - zz +- |B|; rho has eigenvalues M_i/4.
    std::array<double, 4> m;
};

OGIntermediates og_intermediates(const G2Means &xi);

/// Canonical state on G2 built from the means alone. Throws NonPhysicalMeans
/// when some M_i < -1e-12.
ReconstructionResult og_gcdo(const G2Means &xi);

/// Multipliers of the exponent E = a ZZ + ... written through the scalars
/// a = l_zz, b = l_xx + l_yy - i(l_xy - l_yx), d = l_xx - l_yy + i(l_xy + l_yx).
struct OGMultipliers {
    double a;
    Complex b;
    Complex d;
    /// The five multipliers in G2 order (ZZ, XX, XY, YX, YY).
    std::array<double, 5> lambda;
    double partition;
};

/// Recovers the multipliers from the means. Throws BoundaryDetected when some
/// M_i vanishes (the multipliers diverge there) and NonPhysicalMeans when one
/// is negative.
OGMultipliers og_multipliers(const G2Means &xi);

/// exp(-E)/Z evaluated from the block structure of E, stable as |b| or |d|
/// go to zero.
ComplexMatrix og_density_from_multipliers(double a, Complex b, Complex d);

struct OHIntermediates {
    /// N1,4 = 1 +- (|D| + |B|)/2, N2,3 = 1 +- (|D| - |B|)/2.
    std::array<double, 4> n;
    /// Predicted ZZ mean, xy*yx - xx*yy.
    double t;
};

OHIntermediates oh_intermediates(const H2Means &xi);

/// Canonical state on H2. Throws NonPhysicalMeans when some N_i < -1e-12.
ReconstructionResult oh_gcdo(const H2Means &xi);

/// rho = (I + x1 ZZI)(I + x2 IZZ)/8. Throws InvalidArgument for |x| > 1.
ReconstructionResult ghz_b3_gcdo(double xi_12, double xi_23);

/// rho = (I + x1 ZZI)(I + x2 IZZ)(I + zx XXX + zy YYY)/8. Throws
/// NonPhysicalMeans when the product is not positive semidefinite.
ReconstructionResult ghz_c3_gcdo(double xi_12, double xi_23, double zeta_x, double zeta_y);

/// Closed form for `c` when its level is a single-spin level, G2, H2, B3 or
/// C3 (observable order irrelevant); nullopt otherwise.
std::optional<ReconstructionResult> try_closed_form(const ConstraintSet &c);

}  // namespace qmaxent

#endif
