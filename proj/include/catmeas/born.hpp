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

/**
 * @file
 * The Born-rule transformation and its bijection with density operators:
 *
 *  - born_measure / born_transformation map a state to its probability
 *    assignment on POVMs;
 *  - injectivity_witness separates two distinct states with a two-outcome
 *    POVM built from the spectral projection of their difference;
 *  - ic_effect_basis builds an informationally complete effect family
 *    from a canonical Hermitian operator basis;
 *  - reconstruct inverts a candidate transformation back to a density
 *    operator by linear inversion over that family, with PSD and trace
 *    validation detecting candidates no state induces.
 */

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "catmeas/errors.hpp"
#include "catmeas/functors.hpp"
#include "catmeas/naturality.hpp"
#include "catmeas/operators.hpp"

namespace catmeas {

inline ProbabilityMeasure born_measure(const DensityOperator &rho, const Povm &povm,
                                       const Tolerances &tol = default_tolerances()) {
    if (rho.dim() != povm.dim())
        throw DimMismatch("state dimension " + std::to_string(rho.dim()) +
                          " vs POVM dimension " + std::to_string(povm.dim()));
    std::vector<double> probs;
    probs.reserve(povm.atom_effects().size());
    for (const auto &e : povm.atom_effects())
        probs.push_back(std::max(0.0, trace_pair(rho.op(), e.op(), tol)));
    return ProbabilityMeasure(povm.space(), std::move(probs), tol);
}

inline CandidateTransformation born_transformation(DensityOperator rho) {
    return CandidateTransformation::born(std::move(rho));
}

struct WitnessResult {
    Povm povm;                   ///< {P, 1-P} on a fresh two-point space
    HermitianOperator projector; ///< P
    double gap = 0.0;            ///< Tr[P rho] - Tr[P sigma] = Tr[P delta]
    double eigenvalue_sum = 0.0; ///< sum of delta eigenvalues above the cut, for cross-checking
    int projector_rank = 0;
};

/// Separating POVM for two distinct states. The spectral cut sits at half
/// the largest positive eigenvalue of delta = rho - sigma, which always
/// captures at least one eigenvalue when the states differ.
inline WitnessResult injectivity_witness(const DensityOperator &rho, const DensityOperator &sigma,
                                         double tol = default_tolerances().states_equal) {
    if (rho.dim() != sigma.dim())
        throw DimMismatch("witness between states of dimensions " + std::to_string(rho.dim()) +
                          " and " + std::to_string(sigma.dim()));
    const HermitianOperator delta = rho.op() - sigma.op();
    if (delta.max_entry_norm() <= tol)
        throw StatesEqual("states agree to within " + std::to_string(tol) +
                          "; no separating POVM exists");

    const SpectralDecomposition decomp = spectral(delta);
    const double lambda_max = decomp.eigenvalues.front();
    const double cut = lambda_max / 2.0;

    const int d = rho.dim();
    Matrix proj = Matrix::Zero(d, d);
    double eig_sum = 0.0;
    int rank = 0;
    for (std::size_t k = 0; k < decomp.eigenvalues.size(); ++k) {
        if (decomp.eigenvalues[k] > cut) {
            proj += decomp.projectors[k].matrix();
            const int r =
                static_cast<int>(std::lround(decomp.projectors[k].matrix().trace().real()));
            eig_sum += decomp.eigenvalues[k] * r;
            rank += r;
        }
    }
    HermitianOperator p(proj);

    const SpacePtr space = make_space({"x", "xp"}, {{"x"}, {"xp"}});
    std::vector<Effect> effects{Effect(p), Effect(identity_operator(d) - p)};
    WitnessResult result{Povm(space, std::move(effects)), p, trace_pair(p, delta), eig_sum, rank};
    return result;
}

/// d^2 effects obtained by shifting and scaling a canonical Hermitian
/// operator basis (identity, symmetric and antisymmetric off-diagonal
/// generators, diagonal traceless generators) into [0, 1].
struct EffectBasis {
    int dim = 0;
    std::vector<Effect> effects;
    std::vector<HermitianOperator> frame_operators;
    std::vector<double> offsets; ///< c_k with M_k = (B_k + c_k 1) / s_k
    std::vector<double> scales;  ///< s_k
    double gram_condition = 0.0;
};

inline EffectBasis ic_effect_basis(int dim, const Tolerances &tol = default_tolerances()) {
    if (dim < 2)
        throw ConfigInvalid("effect basis requires dimension >= 2, got " + std::to_string(dim));

    std::vector<HermitianOperator> frame;
    frame.push_back(identity_operator(dim));
    const std::complex<double> im(0.0, 1.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Matrix s = Matrix::Zero(dim, dim);
            s(i, j) = 1.0;
            s(j, i) = 1.0;
            frame.emplace_back(s);
            Matrix a = Matrix::Zero(dim, dim);
            a(i, j) = -im;
            a(j, i) = im;
            frame.emplace_back(a);
        }
    }
    for (int l = 1; l < dim; ++l) {
        Matrix d = Matrix::Zero(dim, dim);
        for (int i = 0; i < l; ++i)
            d(i, i) = 1.0;
        d(l, l) = -static_cast<double>(l);
        frame.emplace_back(d);
    }

    EffectBasis basis;
    basis.dim = dim;
    basis.frame_operators = frame;
    for (const auto &b : frame) {
        const auto solver = detail::solve_eigen(b);
        const double c = std::max(0.0, -solver.eigenvalues().minCoeff());
        const double s = std::max(1.0, solver.eigenvalues().maxCoeff() + c);
        basis.offsets.push_back(c);
        basis.scales.push_back(s);
        basis.effects.emplace_back(
            (b + identity_operator(dim).scaled(c)).scaled(1.0 / s), tol);
    }

    const int n = static_cast<int>(frame.size());
    Eigen::MatrixXd gram(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            gram(j, k) = gram(k, j) = trace_pair(frame[j], frame[k]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gsolve(gram);
    const double lo = gsolve.eigenvalues().minCoeff();
    const double hi = gsolve.eigenvalues().maxCoeff();
    basis.gram_condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    return basis;
}

/// Inverts a candidate transformation to the density operator inducing
/// it: probes xi on an informationally complete effect family, solves the
/// resulting linear system in the frame basis, and validates the result
/// as a state. Candidates no state induces surface as NotAState.
inline DensityOperator reconstruct(const CandidateTransformation &t, int dim, double tol = 1e-8,
                                   const Tolerances &vt = default_tolerances()) {
    if (t.dim() != dim)
        throw DimMismatch("candidate dimension " + std::to_string(t.dim()) +
                          " vs requested dimension " + std::to_string(dim));
    const EffectBasis basis = ic_effect_basis(dim, vt);
    if (basis.gram_condition > vt.frame_condition)
        throw SingularFrame("frame Gram condition number " +
                            std::to_string(basis.gram_condition));

    const int n = static_cast<int>(basis.effects.size());
    Eigen::VectorXd target(n);
    for (int k = 0; k < n; ++k) {
        const double v = detail::raw_xi(t, basis.effects[k], vt);
        target(k) = basis.scales[k] * v - basis.offsets[k];
    }

    Eigen::MatrixXd gram(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            gram(j, k) = gram(k, j) = trace_pair(basis.frame_operators[j], basis.frame_operators[k]);
    const Eigen::VectorXd coeffs = gram.ldlt().solve(target);

    Matrix solved = Matrix::Zero(dim, dim);
    for (int j = 0; j < n; ++j)
        solved += coeffs(j) * basis.frame_operators[j].matrix();

    try {
        Tolerances state_tol = vt;
        state_tol.density_psd = tol;
        state_tol.density_trace = tol;
        return DensityOperator(HermitianOperator(solved), state_tol);
    } catch (const NotPSD &e) {
        throw NotAState(std::string("solved operator is not positive semidefinite: ") + e.what());
    } catch (const TraceNotOne &e) {
        throw NotAState(std::string("solved operator does not have unit trace: ") + e.what());
    }
}

} // namespace catmeas
