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
 * Hermitian operator algebra on a d-dimensional complex Hilbert space:
 * effect and density-operator validation, eigendecomposition with
 * degeneracy grouping, spectral projectors, and trace pairings.
 *
 * Construction symmetrizes near-Hermitian input (up to a small asymmetry
 * bound) so that decimal-truncated JSON round-trips stay valid.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "catmeas/errors.hpp"
#include "catmeas/tolerances.hpp"

namespace catmeas {

using Matrix = Eigen::MatrixXcd;

class HermitianOperator {
  public:
    explicit HermitianOperator(const Matrix &entries,
                               const Tolerances &tol = default_tolerances()) {
        if (entries.rows() != entries.cols())
            throw NotSquare("operator must be square, got " + std::to_string(entries.rows()) +
                            "x" + std::to_string(entries.cols()));
        const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
        if (asym > tol.hermitian_asymmetry)
            throw NotHermitian("max |A - A^H| entry is " + std::to_string(asym));
        m_ = 0.5 * (entries + entries.adjoint().eval());
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix &matrix() const { return m_; }

    double max_entry_norm() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

    HermitianOperator operator+(const HermitianOperator &o) const {
        return HermitianOperator(Matrix(m_ + o.m_));
    }
    HermitianOperator operator-(const HermitianOperator &o) const {
        return HermitianOperator(Matrix(m_ - o.m_));
    }
    HermitianOperator scaled(double s) const { return HermitianOperator(Matrix(s * m_)); }

    bool approx_equal(const HermitianOperator &o, double tol) const {
        return (m_ - o.m_).cwiseAbs().maxCoeff() <= tol;
    }

  private:
    Matrix m_;
};

inline HermitianOperator make_hermitian(const Matrix &entries,
                                        const Tolerances &tol = default_tolerances()) {
    return HermitianOperator(entries, tol);
}

inline HermitianOperator identity_operator(int dim) {
    return HermitianOperator(Matrix::Identity(dim, dim));
}

inline HermitianOperator zero_operator(int dim) {
    return HermitianOperator(Matrix::Zero(dim, dim));
}

namespace detail {

inline Eigen::SelfAdjointEigenSolver<Matrix> solve_eigen(const HermitianOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix());
    if (solver.info() != Eigen::Success)
        throw EigensolverFailure("self-adjoint eigensolver did not converge at dim " +
                                 std::to_string(op.dim()));
    return solver;
}

} // namespace detail

/// Tr[ab] for Hermitian a, b; the pairing is real up to floating-point
/// residue, which is checked and discarded.
inline double trace_pair(const HermitianOperator &a, const HermitianOperator &b,
                         const Tolerances &tol = default_tolerances()) {
    if (a.dim() != b.dim())
        throw DimMismatch("trace pairing of dims " + std::to_string(a.dim()) + " and " +
                          std::to_string(b.dim()));
    const std::complex<double> t = (a.matrix() * b.matrix()).trace();
    if (std::abs(t.imag()) > tol.trace_imag)
        throw NonRealTrace("imaginary trace residue " + std::to_string(t.imag()));
    return t.real();
}

/// An operator M with spectrum inside [0, 1]: one POVM outcome.
class Effect {
  public:
    explicit Effect(HermitianOperator op, const Tolerances &tol = default_tolerances())
        : op_(std::move(op)) {
        const auto solver = detail::solve_eigen(op_);
        const double lo = solver.eigenvalues().minCoeff();
        const double hi = solver.eigenvalues().maxCoeff();
        if (lo < -tol.effect_spectrum || hi > 1.0 + tol.effect_spectrum)
            throw NotAnEffect("eigenvalue " + std::to_string(lo < -tol.effect_spectrum ? lo : hi) +
                              " outside [0,1]");
    }

    const HermitianOperator &op() const { return op_; }
    int dim() const { return op_.dim(); }

    Effect complement(const Tolerances &tol = default_tolerances()) const {
        return Effect(identity_operator(dim()) - op_, tol);
    }

  private:
    HermitianOperator op_;
};

inline Effect as_effect(const HermitianOperator &op, const Tolerances &tol = default_tolerances()) {
    return Effect(op, tol);
}

/// Positive semidefinite, unit trace.
class DensityOperator {
  public:
    explicit DensityOperator(HermitianOperator op, const Tolerances &tol = default_tolerances())
        : op_(std::move(op)) {
        const auto solver = detail::solve_eigen(op_);
        const double lo = solver.eigenvalues().minCoeff();
        if (lo < -tol.density_psd)
            throw NotPSD("eigenvalue " + std::to_string(lo) + " below zero");
        const double tr = op_.matrix().trace().real();
        if (std::abs(tr - 1.0) > tol.density_trace)
            throw TraceNotOne("trace is " + std::to_string(tr));
    }

    const HermitianOperator &op() const { return op_; }
    int dim() const { return op_.dim(); }

  private:
    HermitianOperator op_;
};

inline DensityOperator as_density(const HermitianOperator &op,
                                  const Tolerances &tol = default_tolerances()) {
    return DensityOperator(op, tol);
}

inline DensityOperator maximally_mixed(int dim) {
    return DensityOperator(identity_operator(dim).scaled(1.0 / dim));
}

/// Eigenvalues grouped within a degeneracy tolerance, one rank-aggregated
/// projector per distinct eigenvalue. Eigenvalues are listed descending.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<HermitianOperator> projectors;
};

inline SpectralDecomposition spectral(const HermitianOperator &op,
                                      double degeneracy_tol = default_tolerances().degeneracy) {
    const auto solver = detail::solve_eigen(op);
    const auto &vals = solver.eigenvalues(); // ascending
    const auto &vecs = solver.eigenvectors();
    const int d = op.dim();

    SpectralDecomposition out;
    int i = d - 1;
    while (i >= 0) {
        int j = i;
        while (j - 1 >= 0 && vals(i) - vals(j - 1) <= degeneracy_tol)
            --j;
        Matrix proj = Matrix::Zero(d, d);
        double sum = 0.0;
        for (int k = j; k <= i; ++k) {
            proj += vecs.col(k) * vecs.col(k).adjoint();
            sum += vals(k);
        }
        out.eigenvalues.push_back(sum / (i - j + 1));
        out.projectors.emplace_back(proj);
        i = j - 1;
    }
    return out;
}

/// Sum of spectral projectors with eigenvalue strictly above eps; the zero
/// operator when no eigenvalue qualifies.
inline HermitianOperator positive_projector(const HermitianOperator &op, double eps,
                                            double degeneracy_tol = default_tolerances().degeneracy) {
    const auto decomp = spectral(op, degeneracy_tol);
    Matrix acc = Matrix::Zero(op.dim(), op.dim());
    for (std::size_t k = 0; k < decomp.eigenvalues.size(); ++k)
        if (decomp.eigenvalues[k] > eps)
            acc += decomp.projectors[k].matrix();
    return HermitianOperator(acc);
}

} // namespace catmeas
