// Copyright 2026 The catmeas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace catmeas {

/// Central knob surface for all numerical validation thresholds.
/// Constructors take these as optional arguments; the defaults below are
/// what the test suites pin.
struct Tolerances {
    double hermitian_asymmetry = 1e-9; ///< max |A - A^H| entry accepted before rejecting
    double effect_spectrum = 1e-9;     ///< slack around [0,1] for effect eigenvalues
    double density_psd = 1e-9;         ///< eigenvalue floor for density operators
    double density_trace = 1e-9;       ///< |Tr[rho] - 1| bound
    double degeneracy = 1e-8;          ///< eigenvalue grouping width for spectral projectors
    double spectral_check = 1e-9;      ///< projector idempotence / completeness bound
    double trace_imag = 1e-10;         ///< residual imaginary part allowed in trace pairings
    double povm_normalization = 1e-9;  ///< |sum of atom effects - identity| entry bound
    double measure_atom = 1e-9;        ///< negativity slack for probability-measure atoms
    double measure_sum = 1e-9;         ///< |sum of atom probabilities - 1| bound
    double states_equal = 1e-10;       ///< max-entry threshold below which two states count as equal
    double frame_condition = 1e8;      ///< Gram condition number beyond which reconstruction aborts
};

inline const Tolerances &default_tolerances() {
    static const Tolerances t{};
    return t;
}

} // namespace catmeas
